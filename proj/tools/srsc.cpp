#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "srsc/dataset.hpp"
#include "srsc/evaluation.hpp"
#include "srsc/hierarchy.hpp"

namespace {

struct CommonOpts {
  std::string input;
  std::string label_col;  // index or header name; empty = none
  bool no_header = false;
  std::string delimiter = ",";
  int k = 1;
  std::string mode = "psistar";
  int sigma = -1;
  bool exact_k = false;
};

srsc::CsvOptions csv_options(const CommonOpts& o) {
  srsc::CsvOptions opts;
  opts.delimiter = o.delimiter.empty() ? ',' : o.delimiter[0];
  opts.has_header = !o.no_header;
  if (!o.label_col.empty()) {
    try {
      size_t pos = 0;
      const int idx = std::stoi(o.label_col, &pos);
      if (pos == o.label_col.size()) {
        opts.label_column = idx;
        return opts;
      }
    } catch (const std::exception&) {
    }
    opts.label_column = o.label_col;
  }
  return opts;
}

srsc::ClusterConfig cluster_config(const CommonOpts& o, std::uint64_t seed) {
  srsc::ClusterConfig cfg;
  cfg.k = o.k;
  const auto mode = srsc::parse_index_mode(o.mode);
  if (!mode) throw CLI::ValidationError("--mode", "unknown index mode: " + o.mode);
  cfg.mode = *mode;
  cfg.seed = seed;
  if (o.sigma > 0) cfg.sigma = static_cast<std::size_t>(o.sigma);
  cfg.exact_k = o.exact_k;
  return cfg;
}

struct RunOutcome {
  double rand_index = std::nan("");
  double nmi = std::nan("");
  double wall_ms = 0.0;
  srsc::ClusterResult result;
};

RunOutcome run_once(const srsc::LabeledDataset& data,
                    const srsc::ClusterConfig& cfg) {
  RunOutcome out;
  const auto t0 = std::chrono::steady_clock::now();
  out.result = srsc::cluster(data.data, cfg);
  const auto t1 = std::chrono::steady_clock::now();
  out.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (data.has_labels()) {
    const auto truth = srsc::dense_labels(data.labels);
    out.rand_index = srsc::rand_index(truth, out.result.partition.labels);
    out.nmi = srsc::nmi(truth, out.result.partition.labels);
  }
  return out;
}

void write_labels_csv(const std::string& path, const srsc::Partition& part) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "index,label\n";
  for (std::size_t i = 0; i < part.labels.size(); ++i) {
    out << i << "," << part.labels[i] << "\n";
  }
}

bool parse_seed_range(const std::string& text, std::uint64_t& begin,
                      std::uint64_t& end) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) return false;
  try {
    begin = std::stoull(text.substr(0, pos));
    end = std::stoull(text.substr(pos + 2));
  } catch (const std::exception&) {
    return false;
  }
  return end > begin;
}

struct Summary {
  double mean, min, max, q1, median, q3, stddev;
};

Summary summarize(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const auto hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    return v[lo] * (1.0 - frac) + v[hi] * frac;
  };
  Summary s{};
  s.min = v.front();
  s.max = v.back();
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  double sum = 0.0;
  for (double x : v) sum += x;
  s.mean = sum / static_cast<double>(n);
  double var = 0.0;
  for (double x : v) var += (x - s.mean) * (x - s.mean);
  s.stddev = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
  return s;
}

int cmd_cluster(const CommonOpts& common, std::uint64_t seed,
                const std::string& out_labels, const std::string& emit_tree) {
  const auto data = srsc::load_csv(common.input, csv_options(common));
  const auto outcome = run_once(data, cluster_config(common, seed));

  if (!out_labels.empty()) write_labels_csv(out_labels, outcome.result.partition);
  if (!emit_tree.empty()) {
    std::ofstream out(emit_tree);
    if (!out) throw std::runtime_error("cannot write " + emit_tree);
    out << srsc::export_tree(outcome.result.tree) << "\n";
  }
  std::cout << "n=" << data.data.size() << " clusters="
            << outcome.result.partition.k << " wall_ms=" << outcome.wall_ms
            << "\n";
  if (data.has_labels()) {
    std::cout << "rand_index=" << outcome.rand_index << " nmi=" << outcome.nmi
              << "\n";
  }
  return 0;
}

int cmd_experiment(const CommonOpts& common, std::uint64_t seed_begin,
                   std::uint64_t seed_end, int jobs,
                   const std::string& out_metrics) {
  const auto data = srsc::load_csv(common.input, csv_options(common));
  if (!data.has_labels()) {
    throw std::runtime_error("experiment requires ground-truth labels");
  }
  const auto truth = srsc::dense_labels(data.labels);
  const auto count = static_cast<std::size_t>(seed_end - seed_begin);

  struct Row {
    std::uint64_t seed;
    int k;
    double ri, nmi, wall_ms;
  };
  std::vector<Row> rows(count);

  std::atomic<std::size_t> cursor{0};
  const int workers = std::max(1, jobs);
  auto work = [&] {
    for (std::size_t i = cursor.fetch_add(1); i < count;
         i = cursor.fetch_add(1)) {
      const std::uint64_t seed = seed_begin + i;
      const auto outcome = run_once(data, cluster_config(common, seed));
      rows[i] = Row{seed, outcome.result.partition.k, outcome.rand_index,
                    outcome.nmi, outcome.wall_ms};
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  if (!out_metrics.empty()) {
    std::ofstream out(out_metrics);
    if (!out) throw std::runtime_error("cannot write " + out_metrics);
    out << "seed,k,mode,rand_index,nmi,wall_ms\n";
    for (const auto& r : rows) {
      out << r.seed << "," << r.k << "," << common.mode << "," << r.ri << ","
          << r.nmi << "," << r.wall_ms << "\n";
    }
  }

  std::vector<double> ri, nm;
  for (const auto& r : rows) {
    ri.push_back(r.ri);
    nm.push_back(r.nmi);
  }
  const auto sri = summarize(ri);
  const auto snm = summarize(nm);
  std::cout << "metric,mean,min,max,q1,median,q3,stddev\n";
  auto emit = [](const char* name, const Summary& s) {
    std::cout << name << "," << s.mean << "," << s.min << "," << s.max << ","
              << s.q1 << "," << s.median << "," << s.q3 << "," << s.stddev
              << "\n";
  };
  emit("rand_index", sri);
  emit("nmi", snm);
  return 0;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t dims,
              std::uint64_t seed_begin, std::uint64_t seed_end,
              const std::string& out_metrics, const std::string& mode) {
  std::vector<std::pair<std::size_t, double>> timings;
  for (std::size_t n : sizes) {
    double total_ms = 0.0;
    std::size_t runs = 0;
    for (std::uint64_t seed = seed_begin; seed < seed_end; ++seed, ++runs) {
      std::mt19937_64 rng(seed ^ (n * 0x9e3779b97f4a7c15ULL));
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      std::vector<double> values(n * dims);
      for (auto& v : values) v = unit(rng);
      srsc::Dataset data(std::move(values), dims);

      srsc::ClusterConfig cfg;
      cfg.k = 1;
      cfg.seed = seed;
      if (auto m = srsc::parse_index_mode(mode)) cfg.mode = *m;

      const auto t0 = std::chrono::steady_clock::now();
      const auto result = srsc::cluster(data, cfg);
      const auto t1 = std::chrono::steady_clock::now();
      total_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
      (void)result;
    }
    const double mean_ms = total_ms / static_cast<double>(runs);
    timings.emplace_back(n, mean_ms);
    std::cout << "n=" << n << " mean_wall_ms=" << mean_ms << "\n";
  }

  if (!out_metrics.empty()) {
    std::ofstream out(out_metrics);
    if (!out) throw std::runtime_error("cannot write " + out_metrics);
    out << "n,mean_wall_ms\n";
    for (auto [n, ms] : timings) out << n << "," << ms << "\n";
  }

  if (timings.size() >= 2) {
    // Least-squares slope of log(time) vs log(n).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto m = static_cast<double>(timings.size());
    for (auto [n, ms] : timings) {
      const double x = std::log(static_cast<double>(n));
      const double y = std::log(ms);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    std::cout << "fitted_exponent=" << slope << "\n";
  } else {
    std::cout << "fitted_exponent=absent\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SRSC hierarchical clustering"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string seed_spec = "0";
  std::string seeds_spec;
  std::string out_labels, emit_tree, out_metrics;
  int jobs = 1;

  auto add_common = [&](CLI::App* cmd, bool with_k = true) {
    cmd->add_option("--input", common.input, "input CSV path")->required();
    cmd->add_option("--label-col", common.label_col,
                    "ground-truth column (0-based index or header name)");
    cmd->add_flag("--no-header", common.no_header, "input has no header row");
    cmd->add_option("--delimiter", common.delimiter, "field delimiter");
    if (with_k) cmd->add_option("-k,--clusters", common.k, "target cluster count");
    cmd->add_option("--mode", common.mode,
                    "root index: d, dbar, c, cstar, psi, psistar");
    cmd->add_option("--sigma", common.sigma, "boundary pair count");
    cmd->add_flag("--exact-k", common.exact_k, "merge down to exactly K");
  };

  auto* cluster_cmd = app.add_subcommand("cluster", "single clustering run");
  add_common(cluster_cmd);
  cluster_cmd->add_option("--seed", seed_spec, "RNG seed");
  cluster_cmd->add_option("--out-labels", out_labels, "labels CSV path");
  cluster_cmd->add_option("--emit-tree", emit_tree, "cluster tree JSON path");

  auto* exp_cmd = app.add_subcommand("experiment", "multi-seed experiment");
  add_common(exp_cmd);
  exp_cmd->add_option("--seeds", seeds_spec, "seed range A..B")->required();
  exp_cmd->add_option("--jobs", jobs, "concurrent runs");
  exp_cmd->add_option("--out-metrics", out_metrics, "per-run metrics CSV path");

  auto* bench_cmd = app.add_subcommand("bench", "scaling benchmark");
  std::vector<std::size_t> sizes;
  std::size_t dims = 2;
  bench_cmd->add_option("--sizes", sizes, "dataset sizes (ascending)")->required();
  bench_cmd->add_option("--dims", dims, "feature dimension");
  bench_cmd->add_option("--seeds", seeds_spec, "seed range A..B");
  bench_cmd->add_option("--mode", common.mode, "root index mode");
  bench_cmd->add_option("--out-metrics", out_metrics, "timings CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cluster_cmd->parsed()) {
      if (!std::filesystem::exists(common.input)) {
        std::cerr << "error: no such file: " << common.input << "\n";
        return 2;
      }
      return cmd_cluster(common, std::stoull(seed_spec), out_labels, emit_tree);
    }
    if (exp_cmd->parsed()) {
      if (!std::filesystem::exists(common.input)) {
        std::cerr << "error: no such file: " << common.input << "\n";
        return 2;
      }
      std::uint64_t begin = 0, end = 0;
      if (!parse_seed_range(seeds_spec, begin, end)) {
        std::cerr << "error: bad seed range (expected A..B): " << seeds_spec
                  << "\n";
        return 1;
      }
      return cmd_experiment(common, begin, end, jobs, out_metrics);
    }
    if (bench_cmd->parsed()) {
      if (!std::is_sorted(sizes.begin(), sizes.end())) {
        std::cerr << "error: --sizes must be ascending\n";
        return 1;
      }
      std::uint64_t begin = 0, end = 1;
      if (!seeds_spec.empty() && !parse_seed_range(seeds_spec, begin, end)) {
        std::cerr << "error: bad seed range (expected A..B): " << seeds_spec
                  << "\n";
        return 1;
      }
      return cmd_bench(sizes, dims, begin, end, out_metrics, common.mode);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
