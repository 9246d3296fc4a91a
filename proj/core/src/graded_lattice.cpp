#include "weylgraded/graded_lattice.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "weylgraded/errors.hpp"
#include "weylgraded/skew_element.hpp"

namespace weylgraded {

namespace {

RationalFunction linear(Int offset) { return RationalFunction(Polynomial::linear(Rational(offset))); }

// Rebuild a lattice from a degreewise rule over a window that covers both
// tails of every input.
template <typename Rule>
GradedLattice build(Int lo, Int hi, Rule rule) {
  std::vector<RationalFunction> gens;
  gens.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Int m = lo; m <= hi; ++m) gens.push_back(rule(m));
  return GradedLattice(lo, std::move(gens));
}

}  // namespace

GradedLattice::GradedLattice(Int lo, std::vector<RationalFunction> generators)
    : lo_(lo), gens_(std::move(generators)) {
  if (gens_.empty()) throw InvalidArgument("graded lattice needs a nonempty window");
  for (auto& g : gens_) {
    if (g.is_zero()) throw InvalidArgument("graded lattice generator must be nonzero");
    g = g.monic();
  }
  while (gens_.size() > 1 && gens_[gens_.size() - 2] == gens_.back()) gens_.pop_back();
  while (gens_.size() > 1 && gens_[0] == (gens_[1] * linear(lo_)).monic()) {
    gens_.erase(gens_.begin());
    ++lo_;
  }
}

GradedLattice GradedLattice::unit() { return GradedLattice(0, {RationalFunction(1)}); }

RationalFunction GradedLattice::generator(Int m) const {
  if (m > hi()) return gens_.back();
  if (m >= lo_) return gens_[static_cast<std::size_t>(m - lo_)];
  RationalFunction g = gens_.front();
  for (Int t = lo_ - 1; t >= m; --t) g *= linear(t);
  return g;
}

std::vector<RationalFunction> GradedLattice::generators(Int from, Int to) const {
  std::vector<RationalFunction> out;
  if (to < from) return out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  // Walk down from the window once instead of recomputing each left tail.
  std::map<Int, RationalFunction> below;
  if (from < lo_) {
    RationalFunction g = gens_.front();
    for (Int t = lo_ - 1; t >= from; --t) {
      g *= linear(t);
      if (t <= to) below.emplace(t, g);
    }
  }
  for (Int m = from; m <= to; ++m) {
    out.push_back(m < lo_ ? below.at(m) : generator(m));
  }
  return out;
}

std::string GradedLattice::to_string() const {
  std::ostringstream os;
  os << "[" << lo_ << ".." << hi() << "]";
  for (Int m = lo_; m <= hi(); ++m) {
    os << " " << m << ":" << generator(m).to_string();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedLattice& lattice) {
  return os << lattice.to_string();
}

GradedLattice left_multiply(const GradedLattice& L, const RationalFunction& c, Int k) {
  if (c.is_zero()) throw InvalidArgument("left_multiply by zero");
  return build(L.lo() + k, L.hi() + k,
               [&](Int m) { return c * conjugate_by_power(L.generator(m - k), k); });
}

GradedLattice lattice_shift(const GradedLattice& L, Int s) {
  return left_multiply(L, RationalFunction(1), s);
}

GradedLattice lattice_scale(const GradedLattice& L, const RationalFunction& f) {
  if (f.is_zero()) throw InvalidArgument("lattice_scale by zero");
  return left_multiply(L, f, 0);
}

GradedLattice lattice_intersect(const GradedLattice& L1, const GradedLattice& L2) {
  return build(std::min(L1.lo(), L2.lo()), std::max(L1.hi(), L2.hi()), [&](Int m) {
    return fractional_lcm(L1.generator(m), L2.generator(m));
  });
}

GradedLattice lattice_sum(const GradedLattice& L1, const GradedLattice& L2) {
  return build(std::min(L1.lo(), L2.lo()), std::max(L1.hi(), L2.hi()), [&](Int m) {
    return fractional_gcd(L1.generator(m), L2.generator(m));
  });
}

bool is_A_module(const GradedLattice& L) {
  // Beyond [lo - 1, hi + 1] both conditions follow from the tail rules.
  for (Int m = L.lo() - 1; m <= L.hi() + 1; ++m) {
    const RationalFunction g = L.generator(m);
    // closure under .x: g_{m+1} | g_m
    if (!L.generator(m + 1).divides(g)) return false;
    // closure under .y: g_{m-1} | g_m (z + m - 1)
    if (!L.generator(m - 1).divides(g * linear(m - 1))) return false;
  }
  return true;
}

GradedLattice iota_single_lattice(Int i) {
  const GradedLattice A = GradedLattice::unit();
  if (i >= 1) return lattice_sum(lattice_scale(A, linear(i)), lattice_shift(A, i + 1));
  if (i == 0) return lattice_shift(A, 1);
  // y^r A = c(z) x^{-r} A with y^r = c(z) x^{-r}.
  const GradedLattice y_part = left_multiply(A, y_power_coefficient(-i), i);
  if (i == -1) return y_part;
  return lattice_sum(lattice_scale(A, linear(i)), y_part);
}

GradedLattice iota_lattice(const FinSet& J, Int shift) {
  GradedLattice result = GradedLattice::unit();
  for (Int i : J) result = lattice_intersect(result, iota_single_lattice(i));
  return lattice_shift(result, shift);
}

namespace {

GradedLattice x_candidate(const GradedLattice& L, Int j) {
  return build(std::min(L.lo(), j), std::max(L.hi(), j + 1), [&](Int m) {
    return m <= j ? L.generator(m) * linear(j) : L.generator(m);
  });
}

GradedLattice y_candidate(const GradedLattice& L, Int j) {
  return build(std::min(L.lo(), j), std::max(L.hi(), j + 1), [&](Int m) {
    return m > j ? L.generator(m) * linear(j) : L.generator(m);
  });
}

}  // namespace

SimpleQuotients simple_quotients(const GradedLattice& L, Int j) {
  return SimpleQuotients{is_A_module(x_candidate(L, j)), is_A_module(y_candidate(L, j))};
}

SimpleLabel simple_factor(const GradedLattice& L, Int j) {
  const RationalFunction ratio = L.generator(j) / L.generator(j + 1);
  if (ratio == RationalFunction(1)) return SimpleLabel::X(j);
  if (ratio == linear(j)) return SimpleLabel::Y(j);
  throw InvalidArgument("simple_factor: g_" + std::to_string(j) + " / g_" +
                        std::to_string(j + 1) + " = " + ratio.to_string() +
                        " is neither 1 nor (z+j); not a rank-1 projective lattice");
}

GradedLattice iota_apply(const GradedLattice& L, Int j) {
  return simple_factor(L, j).kind() == SimpleLabel::Kind::X ? x_candidate(L, j)
                                                             : y_candidate(L, j);
}

GradedLattice iota_apply(const GradedLattice& L, const FinSet& J) {
  GradedLattice result = L;
  for (Int j : J) result = iota_apply(result, j);
  return result;
}

GradedLattice iota_inverse_apply(const GradedLattice& L, const FinSet& J) {
  return lattice_scale(iota_apply(L, J),
                       RationalFunction(Polynomial(1), Polynomial::linear_product(J)));
}

DSet lattice_dset(const GradedLattice& L) {
  std::vector<Int> exceptions;
  const Int from = std::min<Int>(L.lo(), 0);
  const Int to = std::max<Int>(L.hi(), 0);
  for (Int j = from; j <= to; ++j) {
    const bool is_x = simple_factor(L, j).kind() == SimpleLabel::Kind::X;
    if (is_x != (j >= 0)) exceptions.push_back(j);
  }
  return DSet{FinSet(std::move(exceptions))};
}

DSet to_dset(const FinSet& J, Int shift) {
  // ([0, inf) + s) xor [0, inf) is [0, s) or [s, 0).
  FinSet delta = shift >= 0 ? FinSet::range(0, shift - 1) : FinSet::range(shift, -1);
  return DSet{J.translated(shift) ^ delta};
}

RationalFunction hom_generator(const GradedLattice& P, const GradedLattice& Q) {
  const Int from = std::min(P.lo(), Q.lo());
  const Int to = std::max(P.hi(), Q.hi());
  const auto gp = P.generators(from, to);
  const auto gq = Q.generators(from, to);
  RationalFunction h = gq[0] / gp[0];
  for (std::size_t k = 1; k < gp.size(); ++k) h = fractional_lcm(h, gq[k] / gp[k]);
  return h.monic();
}

std::vector<std::pair<Rational, int>> cokernel_support(const GradedLattice& P,
                                                       const GradedLattice& Q) {
  const RationalFunction h = hom_generator(P, Q);
  const Int from = std::min(P.lo(), Q.lo()) - 1;
  const Int to = std::max(P.hi(), Q.hi()) + 1;
  // t_m with (Q / hP)_m = k[z] / t_m, constant outside [from, to].
  auto quotient_at = [&](Int m) {
    return (h * P.generator(m) / Q.generator(m)).as_polynomial();
  };
  std::map<Int, Polynomial> t;
  for (Int m = from; m <= to; ++m) t.emplace(m, quotient_at(m));
  auto t_at = [&](Int m) {
    return t.at(std::clamp(m, from, to));
  };

  std::vector<Rational> points;
  for (const auto& [m, poly] : t) {
    auto [roots, rest] = poly.rational_roots();
    if (rest.degree() > 0) {
      throw Unsupported("cokernel_support: non-rational support " + rest.to_string());
    }
    for (const auto& root : roots) points.push_back(root.first);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<std::pair<Rational, int>> support;
  for (const Rational& p : points) {
    int count = 0;
    if (is_integer(p)) {
      // X<j> factors live in degrees <= j, Y<j> factors in degrees > j.
      const Int j = -static_cast<Int>(boost::multiprecision::numerator(p));
      count = root_multiplicity(t_at(j), p) + root_multiplicity(t_at(j + 1), p);
    } else {
      for (const auto& [m, poly] : t) count = std::max(count, root_multiplicity(poly, p));
    }
    if (count > 0) support.emplace_back(p, count);
  }
  return support;
}

}  // namespace weylgraded
