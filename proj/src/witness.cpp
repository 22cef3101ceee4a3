#include "modcert/witness.hpp"

#include "modcert/error.hpp"

namespace modcert {

ModularCheck is_q_modular(const Graph& g, const VertexSet& s, std::int64_t q) {
  if (q < 1) throw InvalidInput("is_q_modular: q must be >= 1, got " + std::to_string(q));
  const IntVector deg = induced_degrees(g, s);
  ModularCheck out;
  out.modular = true;
  if (deg.size() == 0) return out;
  out.residue = floor_mod(deg(0), q);
  for (Eigen::Index i = 1; i < deg.size(); ++i) {
    if (floor_mod(deg(i), q) != out.residue) {
      out.modular = false;
      out.conflict = std::make_pair(s[0], s[static_cast<std::size_t>(i)]);
      out.residue = 0;
      break;
    }
  }
  return out;
}

ModularWitness ModularWitness::make(const Graph& g, VertexSet a, std::int64_t q) {
  if (!is_power_of_two(q)) throw InvalidInput("modular witness: q = " + std::to_string(q) + " is not a power of two");
  require_in_graph(g, a, "modular witness");
  const ModularCheck check = is_q_modular(g, a, q);
  if (!check.modular) {
    const auto [u, v] = *check.conflict;
    throw InvalidInput("witness is not " + std::to_string(q) + "-modular: vertices '" + g.name(u) + "' and '" +
                       g.name(v) + "' have different degree residues");
  }
  ModularWitness w;
  w.graph_ = &g;
  w.degrees_ = induced_degrees(g, a);
  w.a_ = std::move(a);
  w.q_ = q;
  w.residue_ = check.residue;
  return w;
}

std::int64_t ModularWitness::degree(Vertex v) const {
  const auto pos = a_.index_of(v);
  if (!pos) throw InvalidInput("vertex " + std::to_string(v) + " is not in the witness");
  return degrees_(static_cast<Eigen::Index>(*pos));
}

TerminalResult terminal_check(const ModularWitness& w) {
  if (w.set().size() > static_cast<std::size_t>(w.q())) return TooLarge{};
  const Regularity reg = is_regular(w.graph(), w.set());
  if (!reg.regular) throw InternalError("terminal_check: q-modular set of size <= q is not regular");
  return TerminalRegular{reg.degree};
}

TopBitLabel top_bit_label(const ModularWitness& w, const VertexSet& s) {
  return top_bit_label(w, s, w.residue());
}

TopBitLabel top_bit_label(const ModularWitness& w, const VertexSet& s, std::int64_t lift) {
  const std::int64_t q = w.q();
  if (lift < 0 || lift >= 2 * q || floor_mod(lift, q) != w.residue())
    throw InvalidInput("top_bit_label: lift " + std::to_string(lift) + " does not lift residue " +
                       std::to_string(w.residue()) + " mod " + std::to_string(q));
  if (!s.is_subset_of(w.set())) throw InvalidInput("top_bit_label: labeled set is not inside the witness");
  TopBitLabel label{lift, s, gf2::BitVector(s.size())};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::int64_t r = floor_mod(w.degree(s[i]) - lift, 2 * q);
    if (r != 0 && r != q) throw InternalError("top_bit_label: degree residue is not lift or lift+q");
    label.labels.set(i, r == q);
  }
  return label;
}

gf2::BitVector quotient_coords(const gf2::BitVector& x, std::size_t base) {
  if (base >= x.size()) throw InvalidInput("quotient_coords: base position outside the core");
  gf2::BitVector out(x.size() - 1);
  const bool shift = x.get(base);
  for (std::size_t i = 0, k = 0; i < x.size(); ++i) {
    if (i == base) continue;
    out.set(k++, x.get(i) != shift);
  }
  return out;
}

gf2::BitVector quotient_coords(const VertexSet& core, const gf2::BitVector& x, Vertex base) {
  const auto pos = core.index_of(base);
  if (!pos) throw InvalidInput("quotient_coords: base vertex " + std::to_string(base) + " is not in the core");
  if (x.size() != core.size()) throw InvalidInput("quotient_coords: vector length differs from core size");
  return quotient_coords(x, *pos);
}

bool affine_lift_check(const ModularWitness& w, const VertexSet& sub) {
  if (!sub.is_subset_of(w.set())) throw InvalidInput("affine_lift_check: subset is not inside the witness");
  const VertexSet tail = w.set().minus(sub);
  const TopBitLabel label = top_bit_label(w, sub);
  const std::int64_t q = w.q();
  IntVector corrected(static_cast<Eigen::Index>(sub.size()));
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const auto rho = static_cast<std::int64_t>((w.graph().row(sub[i]) & tail.mask()).count());
    corrected(static_cast<Eigen::Index>(i)) = rho - q * static_cast<std::int64_t>(label.labels.get(i));
  }
  return is_constant_mod(corrected, 2 * q);
}

}  // namespace modcert
