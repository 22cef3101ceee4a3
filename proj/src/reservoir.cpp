#include "modcert/reservoir.hpp"

#include <cmath>
#include <random>

#include "modcert/absorb.hpp"
#include "modcert/error.hpp"
#include "modcert/witness.hpp"

namespace modcert::reservoir {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::size_t trial) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
}

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

void validate(const ReservoirSpec& spec) {
  if (spec.m < 1 || spec.m > kMaxCoreSize) throw InvalidInput("reservoir: core size m must lie in [1, 62]");
  if (!is_power_of_two(spec.q)) throw InvalidInput("reservoir: q must be a power of two");
  if (spec.samples < 1) throw InvalidInput("reservoir: N must be at least 1");
  if (const auto* ex = std::get_if<Explicit>(&spec.distribution)) {
    double total = 0.0;
    for (const auto& [mask, prob] : ex->weights) {
      if (mask.size() != spec.m) throw InvalidInput("reservoir: trace mask length differs from m");
      if (!(prob >= 0.0)) throw InvalidInput("reservoir: negative probability");
      total += prob;
    }
    if (std::abs(total - 1.0) > 1e-12) throw InvalidInput("reservoir: probabilities sum to " + std::to_string(total));
    if (ex->basis.size() != spec.m - 1) throw InvalidInput("reservoir: basis must list m-1 traces");
    std::vector<gf2::BitVector> columns;
    for (const auto& b : ex->basis) {
      if (b.size() != spec.m) throw InvalidInput("reservoir: basis mask length differs from m");
      columns.push_back(quotient_coords(b));
    }
    if (gf2::rank(gf2::BitMatrix::from_columns(columns, spec.m - 1)) != spec.m - 1)
      throw InvalidInput("reservoir: basis traces do not form a basis of the quotient");
  }
}

std::pair<std::vector<gf2::BitVector>, double> basis_family(const ReservoirSpec& spec) {
  validate(spec);
  std::vector<gf2::BitVector> basis;
  if (std::holds_alternative<Uniform>(spec.distribution)) {
    for (std::size_t i = 1; i < spec.m; ++i) {
      gf2::BitVector b(spec.m);
      b.set(i);
      basis.push_back(std::move(b));
    }
    return {std::move(basis), std::ldexp(1.0, -static_cast<int>(spec.m))};
  }
  const auto& ex = std::get<Explicit>(spec.distribution);
  double p = 1.0;
  for (const auto& b : ex.basis) {
    double pb = 0.0;
    for (const auto& [mask, prob] : ex.weights)
      if (mask == b) pb += prob;
    p = std::min(p, pb);
  }
  if (!(p > 0.0) && !ex.basis.empty()) throw InvalidInput("reservoir: a basis trace has probability 0");
  return {ex.basis, p};
}

TraceTable sample_reservoir(const ReservoirSpec& spec, std::size_t trial) {
  validate(spec);
  auto rng = trial_stream(spec.seed, trial);
  const std::size_t m = spec.m;
  TraceTable::Map entries;
  const auto* ex = std::get_if<Explicit>(&spec.distribution);
  const std::uint64_t low_bits = (std::uint64_t{1} << m) - 1;

  for (std::size_t k = 0; k < spec.samples; ++k) {
    gf2::BitVector trace(m);
    if (!ex) {
      const std::uint64_t bits = rng() & low_bits;
      for (std::size_t i = 0; i < m; ++i) trace.set(i, (bits >> i) & 1U);
    } else {
      const double u = unit_interval(rng);
      double acc = 0.0;
      std::size_t pick = ex->weights.size() - 1;
      for (std::size_t j = 0; j < ex->weights.size(); ++j) {
        acc += ex->weights[j].second;
        if (u < acc) {
          pick = j;
          break;
        }
      }
      trace = ex->weights[pick].first;
    }
    auto& entry = entries[std::move(trace)];
    ++entry.count;
    entry.realizers.push_back(static_cast<Vertex>(m + k));
  }
  std::vector<Vertex> core(m);
  for (std::size_t i = 0; i < m; ++i) core[i] = static_cast<Vertex>(i);
  return TraceTable(VertexSet(m + spec.samples, std::move(core)), std::move(entries));
}

double failure_bound(std::size_t m, std::size_t samples, double p) {
  if (m < 2) return 0.0;
  return static_cast<double>(m - 1) * std::exp(-static_cast<double>(samples) * p / 8.0);
}

std::size_t uniform_sample_size(std::size_t m, std::int64_t q, double delta) {
  if (m < 2 || m > kMaxCoreSize) throw InvalidInput("uniform_sample_size: m must lie in [2, 62]");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidInput("uniform_sample_size: delta must lie in (0, 1)");
  const double scale = std::ldexp(1.0, static_cast<int>(m));
  const auto saturation = static_cast<std::size_t>(2.0 * scale) * static_cast<std::size_t>(q);
  const auto chernoff =
      static_cast<std::size_t>(std::ceil(8.0 * scale * std::log(static_cast<double>(m - 1) / delta)));
  return std::max(saturation, chernoff);
}

AvailabilityEstimate estimate_availability(const ReservoirSpec& spec) {
  const auto [basis, p] = basis_family(spec);
  AvailabilityEstimate out;
  out.p = p;
  out.bound = failure_bound(spec.m, spec.samples, p);
  out.within_hypothesis = static_cast<double>(spec.samples) * p >= 2.0 * static_cast<double>(spec.q);
  std::size_t failures = 0, rich = 0;
  for (std::size_t t = 0; t < spec.trials; ++t) {
    const TraceTable table = sample_reservoir(spec, t);
    bool failed = false;
    for (const auto& b : basis)
      if (table.count(b) < spec.q) failed = true;
    const bool is_rich = rank_rich_check(table, spec.q).rich;
    out.failed.push_back(failed);
    out.rank_rich.push_back(is_rich);
    failures += failed;
    rich += is_rich;
  }
  if (spec.trials > 0) {
    out.failure_rate = static_cast<double>(failures) / static_cast<double>(spec.trials);
    out.rank_rich_rate = static_cast<double>(rich) / static_cast<double>(spec.trials);
  }
  return out;
}

}  // namespace modcert::reservoir
