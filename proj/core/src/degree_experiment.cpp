#include "secgraph/degree_experiment.hpp"

#include <algorithm>
#include <cmath>

#include "secgraph/error.hpp"
#include "secgraph/parallel.hpp"

namespace secgraph {

namespace {

double hist_mean(const std::vector<std::uint64_t>& h, std::uint64_t n) {
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k) sum += static_cast<double>(k) * static_cast<double>(h[k]);
  return sum / static_cast<double>(n);
}

bool chain_ok(const DegreeSummary& s, std::size_t x) {
  const auto lo = std::min(s.in[x], s.out[x]);
  const auto hi = std::max(s.in[x], s.out[x]);
  return s.basic[x] <= lo && hi <= s.enhanced[x] && s.enhanced[x] <= s.in[x] + s.out[x];
}

RunDegrees run_once(const DegreeExperimentConfig& cfg, std::size_t run, std::vector<double>* lengths) {
  const SeedSpec seed{cfg.master_seed, run};
  const double margin = degree_margin(cfg.lambda, cfg.r, cfg.side);
  const Window w = Window::inflated(cfg.side, margin);
  auto goods = sample_ppp(1.0, w, seed, Stream::goods);
  if (cfg.with_center) goods = add_center_node(std::move(goods));
  auto eaves = sample_ppp(cfg.lambda, w, seed, Stream::eaves);
  const auto g = build_directed(std::move(goods), std::move(eaves), cfg.r);
  const auto s = degree_summary(g);

  RunDegrees rd;
  rd.nodes = g.size();
  rd.interior = s.interior_count;
  rd.in = histogram(s.in, s.interior);
  rd.out = histogram(s.out, s.interior);
  rd.basic = histogram(s.basic, s.interior);
  rd.enhanced = histogram(s.enhanced, s.interior);
  for (std::size_t x = 0; x < g.size(); ++x) {
    rd.sum_in += s.in[x];
    rd.sum_out += s.out[x];
    rd.sum_basic += s.basic[x];
    rd.sum_enhanced += s.enhanced[x];
    if (!chain_ok(s, x)) rd.chain_ok = false;
  }
  if (const auto o = g.goods().origin) {
    rd.origin = NodeDegrees{s.in[*o], s.out[*o], s.basic[*o], s.enhanced[*o]};
  }
  if (lengths) *lengths = edge_lengths(g).lengths;
  return rd;
}

template <class Get>
std::vector<double> per_run(const std::vector<RunDegrees>& runs, Get get) {
  std::vector<double> v;
  v.reserve(runs.size());
  for (const auto& r : runs) v.push_back(get(r));
  return v;
}

}  // namespace

double RunDegrees::mean_out() const { return hist_mean(out, interior); }
double RunDegrees::mean_in() const { return hist_mean(in, interior); }
double RunDegrees::mean_basic() const { return hist_mean(basic, interior); }
double RunDegrees::mean_enhanced() const { return hist_mean(enhanced, interior); }

double RunDegrees::fraction_at(const std::vector<std::uint64_t>& hist, std::size_t k) const {
  if (interior == 0 || k >= hist.size()) return 0.0;
  return static_cast<double>(hist[k]) / static_cast<double>(interior);
}

std::vector<std::uint64_t> histogram(const std::vector<std::uint32_t>& values,
                                     const std::vector<bool>& mask) {
  std::vector<std::uint64_t> h;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!mask[i]) continue;
    if (values[i] >= h.size()) h.resize(values[i] + 1, 0);
    ++h[values[i]];
  }
  return h;
}

std::vector<double> pooled_pmf(const std::vector<const std::vector<std::uint64_t>*>& hists) {
  std::vector<double> pmf;
  double total = 0.0;
  for (const auto* h : hists) {
    if (h->size() > pmf.size()) pmf.resize(h->size(), 0.0);
    for (std::size_t k = 0; k < h->size(); ++k) {
      pmf[k] += static_cast<double>((*h)[k]);
      total += static_cast<double>((*h)[k]);
    }
  }
  if (total > 0.0)
    for (auto& v : pmf) v /= total;
  return pmf;
}

namespace {

using Hist = std::vector<std::uint64_t> RunDegrees::*;

std::vector<double> pooled(const std::vector<RunDegrees>& runs, Hist field) {
  std::vector<const std::vector<std::uint64_t>*> hists;
  for (const auto& r : runs) hists.push_back(&(r.*field));
  return pooled_pmf(hists);
}

}  // namespace

std::vector<double> DegreeExperiment::pmf_in() const { return pooled(runs, &RunDegrees::in); }
std::vector<double> DegreeExperiment::pmf_out() const { return pooled(runs, &RunDegrees::out); }
std::vector<double> DegreeExperiment::pmf_basic() const { return pooled(runs, &RunDegrees::basic); }
std::vector<double> DegreeExperiment::pmf_enhanced() const {
  return pooled(runs, &RunDegrees::enhanced);
}

std::vector<double> DegreeExperiment::per_run_mean_out() const {
  return per_run(runs, [](const RunDegrees& r) { return r.mean_out(); });
}
std::vector<double> DegreeExperiment::per_run_mean_in() const {
  return per_run(runs, [](const RunDegrees& r) { return r.mean_in(); });
}
std::vector<double> DegreeExperiment::per_run_mean_basic() const {
  return per_run(runs, [](const RunDegrees& r) { return r.mean_basic(); });
}
std::vector<double> DegreeExperiment::per_run_mean_enhanced() const {
  return per_run(runs, [](const RunDegrees& r) { return r.mean_enhanced(); });
}

std::uint64_t DegreeExperiment::interior_nodes() const {
  std::uint64_t n = 0;
  for (const auto& r : runs) n += r.interior;
  return n;
}

bool DegreeExperiment::identity_holds() const {
  return std::all_of(runs.begin(), runs.end(), [](const RunDegrees& r) {
    return r.sum_basic + r.sum_enhanced == 2 * r.sum_out && r.sum_in == r.sum_out;
  });
}

bool DegreeExperiment::chain_holds() const {
  return std::all_of(runs.begin(), runs.end(), [](const RunDegrees& r) { return r.chain_ok; });
}

DegreeExperiment run_degree_experiment(const DegreeExperimentConfig& cfg) {
  detail::require(cfg.lambda >= 0.0 && std::isfinite(cfg.lambda), "lambda must be finite and >= 0");
  detail::require(cfg.r > 0.0, "range r must be > 0");
  detail::require(std::isfinite(cfg.r) || cfg.lambda > 0.0, "r = inf needs lambda > 0");
  detail::require(cfg.side > 0.0, "window side must be > 0");
  detail::require(cfg.runs >= 1, "runs must be >= 1");

  DegreeExperiment ex;
  ex.config = cfg;
  ex.runs.resize(static_cast<std::size_t>(cfg.runs));
  std::vector<std::vector<double>> lengths(cfg.collect_lengths ? ex.runs.size() : 0);
  parallel_for(ex.runs.size(), cfg.workers, [&](std::size_t i) {
    ex.runs[i] = run_once(cfg, i, cfg.collect_lengths ? &lengths[i] : nullptr);
  });
  for (auto& l : lengths) ex.lengths.insert(ex.lengths.end(), l.begin(), l.end());
  return ex;
}

}  // namespace secgraph
