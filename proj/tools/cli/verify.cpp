#include "cli/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "weylgraded/classification.hpp"
#include "weylgraded/errors.hpp"
#include "weylgraded/graded_lattice.hpp"
#include "weylgraded/gwa_rings.hpp"
#include "weylgraded/k_theory.hpp"
#include "weylgraded/necklace.hpp"
#include "weylgraded/picard.hpp"
#include "weylgraded/skew_element.hpp"

namespace weylgraded::cli {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

class Sweep {
 public:
  Sweep(std::string name, const VerifyOptions& options)
      : rng_(options.seed), window_(options.window) {
    report_.name = std::move(name);
  }

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++report_.passed;
      return;
    }
    ++report_.failed;
    if (report_.failures.size() < kMaxRecordedFailures) report_.failures.push_back(what);
  }

  // Runs body and records an exception as a failure.
  void guarded(const std::string& what, const std::function<bool()>& body) {
    try {
      check(body(), what);
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }

  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }

  FinSet random_set(Int lo, Int hi, std::size_t max_size) {
    const auto size = static_cast<std::size_t>(uniform(0, static_cast<Int>(max_size)));
    std::vector<Int> items;
    for (std::size_t k = 0; k < size; ++k) items.push_back(uniform(lo, hi));
    return FinSet(std::move(items));
  }

  PicElement random_pic(Int b_bound, Int j_bound, std::size_t max_size) {
    const int a = uniform(0, 1) == 0 ? 1 : -1;
    return PicElement{a, uniform(-b_bound, b_bound), random_set(-j_bound, j_bound, max_size)};
  }

  Int window() const { return window_; }
  SuiteReport take() { return std::move(report_); }

 private:
  std::mt19937_64 rng_;
  Int window_;
  SuiteReport report_;
};

// Every subset of [lo, hi] with at most max_size elements.
std::vector<FinSet> small_subsets(Int lo, Int hi, std::size_t max_size) {
  std::vector<FinSet> out{FinSet{}};
  for (Int v = lo; v <= hi; ++v) {
    const std::size_t count = out.size();
    for (std::size_t k = 0; k < count; ++k) {
      if (out[k].size() < max_size) out.push_back(out[k] | FinSet{v});
    }
  }
  return out;
}

std::vector<AdmissiblePair> admissible_pairs(Int max_n) {
  std::vector<AdmissiblePair> out;
  for (Int n = 1; n <= max_n; ++n) {
    for (const FinSet& J : small_subsets(0, n - 1, static_cast<std::size_t>(n))) {
      out.push_back(AdmissiblePair{J, n});
    }
  }
  return out;
}

std::string pair_text(const FinSet& J, Int n) {
  return "(" + J.to_string() + ", " + std::to_string(n) + ")";
}

void combinatorics_suite(Sweep& s) {
  const Int w = s.window();
  for (int trial = 0; trial < 500; ++trial) {
    const Int n = s.uniform(1, w + 2);
    const FinSet I = s.random_set(-3 * w, 3 * w, 6);
    const FinSet J = s.random_set(-3 * w, 3 * w, 6);
    s.check(boundary(I ^ J, n) == (boundary(I, n) ^ boundary(J, n)),
            "boundary linearity " + I.to_string() + " " + J.to_string());
    s.guarded("inverse_boundary round trip " + pair_text(I, n),
              [&] { return inverse_boundary(boundary(I, n), n) == I; });
    bool even = true;
    for (Int i = 0; i < n; ++i) even = even && slice(J, n, i).size() % 2 == 0;
    s.check(in_boundary_image(J, n) == even, "image parity " + pair_text(J, n));
    if (even) {
      s.guarded("boundary of inverse " + pair_text(J, n),
                [&] { return boundary(inverse_boundary(J, n), n) == J; });
    }
  }
  const Int enum_bound = std::min<Int>(12, 4 * w);
  for (Int n = 1; n <= enum_bound; ++n) {
    s.check(necklace_enumerate(n).size() == necklace_count(n),
            "necklace count vs enumeration n=" + std::to_string(n));
  }
  for (int trial = 0; trial < 300; ++trial) {
    const Int n = s.uniform(1, 8);
    const FinSet J = s.random_set(0, n - 1, static_cast<std::size_t>(n));
    const NecklaceClass c = necklace_canonical({J, n});
    s.check(necklace_canonical(c.representative) == c, "necklace idempotent " + pair_text(J, n));
    const Int r = s.uniform(0, n - 1);
    s.check(necklace_canonical({rotate(J, n, r), n}) == c,
            "necklace rotation invariance " + pair_text(J, n));
  }
}

SkewElement random_skew(Sweep& s, bool in_weyl) {
  SkewElement u;
  const int terms = static_cast<int>(s.uniform(1, 3));
  for (int t = 0; t < terms; ++t) {
    const Int m = s.uniform(-3, 3);
    std::vector<Rational> coeffs;
    const Int degree = s.uniform(0, 2);
    for (Int d = 0; d <= degree; ++d) coeffs.emplace_back(s.uniform(-10, 10));
    RationalFunction c{Polynomial(std::move(coeffs))};
    if (c.is_zero()) continue;
    if (in_weyl && m < 0) c *= y_power_coefficient(-m);
    if (!in_weyl && s.uniform(0, 2) == 0) c /= RationalFunction(Polynomial::linear(Rational(s.uniform(-3, 3))));
    u += SkewElement(c, m);
  }
  return u;
}

void skew_suite(Sweep& s) {
  for (int trial = 0; trial < 200; ++trial) {
    const SkewElement u = random_skew(s, false);
    const SkewElement v = random_skew(s, false);
    const SkewElement t = random_skew(s, false);
    s.check((u * v) * t == u * (v * t), "associativity");
    s.check(u * (v + t) == u * v + u * t, "left distributivity");
    s.check((u + v) * t == u * t + v * t, "right distributivity");
    const SkewElement a = random_skew(s, true);
    const SkewElement b = random_skew(s, true);
    s.check(weyl_membership(a) && weyl_membership(b) && weyl_membership(a * b),
            "Weyl algebra closed under multiplication");
  }
  const SkewElement x = SkewElement::x_power(1);
  const SkewElement y = SkewElement::y_power(1);
  s.check(x * y - y * x == SkewElement(RationalFunction(1)), "xy - yx = 1");
  for (Int m = 1; m <= 2 * s.window(); ++m) {
    s.check(SkewElement::x_power(m) * SkewElement::y_power(m) ==
                SkewElement(RationalFunction(Polynomial::rising(0, m - 1))),
            "x^m y^m m=" + std::to_string(m));
  }
}

void lattice_suite(Sweep& s) {
  for (const FinSet& J : small_subsets(-2, 2, 3)) {
    GradedLattice folded = GradedLattice::unit();
    for (Int i : J) folded = lattice_intersect(folded, iota_single_lattice(i));
    s.check(folded == iota_lattice(J, 0), "intersection formula " + J.to_string());
  }
  const GradedLattice A = GradedLattice::unit();
  const Int w = s.window();
  for (const FinSet& J : small_subsets(-w, w, 3)) {
    for (Int shift = -2; shift <= 2; ++shift) {
      const std::string tag = J.to_string() + "<" + std::to_string(shift) + ">";
      const GradedLattice P = iota_lattice(J, shift);
      s.check(is_A_module(P), "A-module " + tag);
      const DSet predicted = to_dset(J, shift);
      s.guarded("lattice DSet " + tag, [&] { return lattice_dset(P) == predicted; });
      std::set<Rational> support;
      for (const auto& entry : cokernel_support(P, A)) support.insert(entry.first);
      for (Int j = -5; j <= 5; ++j) {
        const SimpleQuotients q = simple_quotients(P, j);
        const bool is_x = simple_factor(P, j).kind() == SimpleLabel::Kind::X;
        s.check(q.x_quotient != q.y_quotient, "duality dichotomy " + tag);
        s.check(q.x_quotient == is_x, "simple factor agrees with quotient " + tag);
        s.check(is_x == predicted.contains(j), "DSet membership " + tag);
        s.check(is_x == ((j >= 0) != (support.count(Rational(-j)) > 0)),
                "hom detects factor " + tag + " j=" + std::to_string(j));
      }
    }
  }
  for (const FinSet& J : small_subsets(0, 3, 4)) {
    for (const FinSet& K : small_subsets(0, 3, 4)) {
      s.guarded("Schanuel supports " + J.to_string() + " " + K.to_string(), [&] {
        return cokernel_support(iota_lattice(J | K, 0), iota_lattice(K, 0)) ==
               cokernel_support(iota_lattice(J, 0), iota_lattice(J & K, 0));
      });
    }
  }
  for (const FinSet& J : small_subsets(-2, 2, 2)) {
    const GradedLattice P = iota_lattice(J, 0);
    s.check(iota_apply(iota_apply(P, 0), 0) == lattice_scale(P, RationalFunction(Polynomial::z())),
            "iota_0 squared is z " + J.to_string());
  }
}

void picard_suite(Sweep& s) {
  const PicElement e = PicElement::identity();
  for (int trial = 0; trial < 10000; ++trial) {
    const PicElement F = s.random_pic(10, 10, 4);
    const PicElement G = s.random_pic(10, 10, 4);
    const PicElement H = s.random_pic(10, 10, 4);
    bool ok = compose(compose(F, G), H) == compose(F, compose(G, H));
    ok = ok && compose(F, e) == F && compose(e, F) == F;
    ok = ok && compose(F, inverse(F)) == e && compose(inverse(F), F) == e;
    ok = ok && sign_rank(compose(F, G)) == compose_affine(sign_rank(F), sign_rank(G));
    s.check(ok, "group axioms " + F.to_string() + " | " + G.to_string() + " | " + H.to_string());
    if (F.is_odd()) {
      const PicElement square = compose(F, F);
      s.check(square == PicElement::iota(F.J.translated(F.b) ^ reflect(F.J, -1)) &&
                  power(F, 4) == e,
              "odd square and fourth power " + F.to_string());
    }
  }
  s.check(compose(PicElement::omega(), PicElement::omega()) == e, "omega squared");
  // sign_rank hits every affine map in the window, with kernel {iota_J}.
  for (Int b = -5; b <= 5; ++b) {
    s.check(sign_rank(PicElement{1, b, {}}) == SignRank{1, b} &&
                sign_rank(PicElement{-1, b + 1, {}}) == SignRank{-1, b},
            "sign_rank surjective at " + std::to_string(b));
  }
  for (int trial = 0; trial < 500; ++trial) {
    const FinSet J = s.random_set(-6, 6, 4);
    const FinSet K = s.random_set(-6, 6, 4);
    const PicElement product = compose(PicElement::iota(J), PicElement::iota(K));
    s.check(sign_rank(product) == SignRank{1, 0} && product.J == (J ^ K),
            "kernel isomorphic to FinSet");
    const PicElement F = s.random_pic(4, 4, 3);
    const PicElement G = s.random_pic(4, 4, 3);
    const DSet E{s.random_set(-4, 4, 3)};
    s.check(act_on_dset(compose(F, G), E) == act_on_dset(F, act_on_dset(G, E)),
            "DSet action axiom");
    const SimpleLabel labels[] = {SimpleLabel::X(s.uniform(-5, 5)), SimpleLabel::Y(s.uniform(-5, 5)),
                                  SimpleLabel::M(Rational(2 * s.uniform(-5, 5) + 1, 2))};
    for (const auto& label : labels) {
      s.check(act_on_simple(compose(F, G), label) == act_on_simple(F, act_on_simple(G, label)),
              "simple action axiom");
    }
  }
  const GradedLattice A = GradedLattice::unit();
  for (const FinSet& J : small_subsets(-2, 2, 5)) {
    for (Int b = -2; b <= 2; ++b) {
      const PicElement F{1, b, J};
      s.guarded("action oracle " + F.to_string(), [&] {
        return lattice_dset(lattice_shift(iota_apply(A, J), b)) == act_on_dset(F, DSet{});
      });
    }
  }
  const PicElement step{1, 1, {0}};
  for (Int n = 1; n <= 5; ++n) {
    s.check(act_on_dset(power(step, n), DSet{}) == to_dset({0, n}, 0),
            "(S iota_0)^n A = iota_{0,n} A, n=" + std::to_string(n));
  }
  for (const AdmissiblePair& p : admissible_pairs(4)) {
    const auto witness = coverage_witness(p.J, p.n, s.window());
    s.check(coverage_holds(witness, p.n, s.window()), "coverage " + pair_text(p.J, p.n));
    const PicElement F{1, p.n, p.J};
    bool agree = true;
    for (const auto& [j, set] : witness) agree = agree && act_on_dset(power(F, j), DSet{}).exceptions == set;
    s.check(agree, "coverage sets are F^j A " + pair_text(p.J, p.n));
  }
}

void classification_suite(Sweep& s) {
  auto verify_form = [&](const PicElement& F) {
    s.guarded("canonical witness " + F.to_string(), [&] {
      const AdmissibleForm form = canonical_admissible(F);
      return is_admissible(form.pair.J, form.pair.n) && form.pair.n == std::abs(F.b) &&
             conjugate(form.conjugator, F) == PicElement{1, form.pair.n, form.pair.J};
    });
  };
  for (const AdmissiblePair& p : admissible_pairs(4)) {
    verify_form(PicElement{1, p.n, p.J});
    verify_form(PicElement{1, -p.n, p.J});
  }
  std::vector<PicElement> generative;
  while (generative.size() < 500) {
    PicElement F{1, s.uniform(-4, 4), s.random_set(-4, 4, 9)};
    if (F.b != 0) generative.push_back(std::move(F));
  }
  for (const auto& F : generative) verify_form(F);
  for (std::size_t k = 0; k + 1 < generative.size(); ++k) {
    const PicElement& F = generative[k];
    const PicElement& G = generative[k + 1];
    s.guarded("same class vs necklace", [&] {
      const AdmissibleForm f = canonical_admissible(F);
      const AdmissibleForm g = canonical_admissible(G);
      const bool necklace_equal = f.pair.n == g.pair.n &&
                                  necklace_canonical(f.pair) == necklace_canonical(g.pair);
      return same_morita_class(F, G) == necklace_equal;
    });
    const PicElement h = s.random_pic(4, 4, 3);
    s.guarded("conjugation invariance " + F.to_string(),
              [&] { return same_morita_class(F, conjugate(h, F)); });
  }
  for (Int n = 1; n <= 8; ++n) {
    std::set<FinSet> classes;
    for (const FinSet& J : small_subsets(0, n - 1, static_cast<std::size_t>(n))) {
      classes.insert(necklace_canonical(canonical_admissible(PicElement{1, n, J}).pair).representative.J);
    }
    s.check(classes.size() == morita_class_count(n), "class completeness n=" + std::to_string(n));
  }
}

void ring_suite(Sweep& s) {
  const Int w = s.window();
  for (const AdmissiblePair& p : admissible_pairs(3)) {
    for (Int j = -w; j <= w; ++j) {
      s.guarded("oracle " + pair_text(p.J, p.n) + " j=" + std::to_string(j), [&] {
        return twisted_endo_piece_oracle(p.J, p.n, j) == graded_piece_closed_form(p.J, p.n, j);
      });
    }
  }
  for (const AdmissiblePair& p : admissible_pairs(4)) {
    s.guarded("ring closure " + pair_text(p.J, p.n), [&] { return verify_ring_closure(p.J, p.n, w); });
    s.guarded("GWA embedding " + pair_text(p.J, p.n), [&] { return verify_gwa_embedding(p.J, p.n); });
    s.check(gwa_simple_hereditary(present(p.J, p.n).f, p.n), "simple hereditary " + pair_text(p.J, p.n));
  }
  const GradedLattice A = GradedLattice::unit();
  for (Int n = 1; n <= 4; ++n) {
    for (Int j = -4; j <= 4; ++j) {
      s.check(graded_piece_closed_form({}, n, j) == piece_from_x_form(A.generator(n * j), -n * j),
              "Veronese piece n=" + std::to_string(n) + " j=" + std::to_string(j));
    }
  }
}

void k_theory_suite(Sweep& s) {
  auto counts = [](const ProjectiveSum& sum) {
    std::map<Int, int> c;
    for (const auto& summand : sum) {
      for (Int t : absorb_shift(summand)) ++c[t];
    }
    return c;
  };
  auto random_sum = [&](std::size_t max_terms) {
    ProjectiveSum sum;
    const Int terms = s.uniform(1, static_cast<Int>(max_terms));
    for (Int k = 0; k < terms; ++k) sum.push_back({s.random_set(-4, 4, 4), s.uniform(-3, 3)});
    return sum;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const ProjectiveSum P = random_sum(4);
    const ProjectiveSum normal = normalize_sum(P);
    s.check(counts(P) == counts(normal), "membership counts preserved");
    s.check(normalize_sum(normal) == normal, "normalize idempotent");
    ProjectiveSum reversed(P.rbegin(), P.rend());
    s.check(normalize_sum(reversed) == normal, "normalize confluent");
    const ProjectiveSum Q = random_sum(2);
    const ProjectiveSum Q2 = random_sum(2);
    ProjectiveSum left = P;
    left.insert(left.end(), Q.begin(), Q.end());
    ProjectiveSum right = P;
    right.insert(right.end(), Q2.begin(), Q2.end());
    s.check(iso_test(left, right) == iso_test(Q, Q2), "cancellation");
  }
  s.check(!single_complement_search({1, 3}, 8).has_value(), "no single free complement for iota_{1,3}A");
  const StablyFreeWitness foo = stably_free_witness({1, 3});
  s.check(foo.adds == std::vector<Int>{3, 1} && foo.result == std::vector<Int>{4, 2, 0},
          "stably free witness for {1,3}");
  for (int trial = 0; trial < 300; ++trial) {
    const FinSet J = s.random_set(-6, 6, 4);
    const FinSet K = s.random_set(-6, 6, 4);
    const Int c = s.uniform(-3, 3);
    const Int d = s.uniform(-3, 3);
    const PicElement sum = theta_map({{J, c}, {K, d}});
    s.check(sum == compose(theta_map({{J, c}}), theta_map({{K, d}})), "theta homomorphism");
    s.check(theta_map({{J, 1}, {FinSet{}, -1}}) == PicElement::iota(J), "theta surjective");
  }
}

const std::map<std::string, std::function<void(Sweep&)>>& suites() {
  static const std::map<std::string, std::function<void(Sweep&)>> table{
      {"combinatorics", combinatorics_suite}, {"skew", skew_suite},
      {"lattices", lattice_suite},           {"picard", picard_suite},
      {"classification", classification_suite}, {"rings", ring_suite},
      {"k_theory", k_theory_suite},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"combinatorics", "skew", "lattices", "picard", "classification", "rings", "k_theory"};
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw InvalidArgument("unknown suite '" + name + "'");
  Sweep sweep(name, options);
  it->second(sweep);
  return sweep.take();
}

Int capped_window(Int requested) {
  const char* cap = std::getenv("WEYLGRADED_MAX_WINDOW");
  if (cap == nullptr || *cap == '\0') return requested;
  char* end = nullptr;
  const long long value = std::strtoll(cap, &end, 10);
  if (end == cap || *end != '\0' || value < 1) return requested;
  return std::min<Int>(requested, value);
}

}  // namespace weylgraded::cli
