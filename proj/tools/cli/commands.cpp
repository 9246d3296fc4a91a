#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "cli/expression.hpp"
#include "cli/json_codec.hpp"
#include "cli/verify.hpp"
#include "weylgraded/errors.hpp"

namespace weylgraded::cli {

std::string format_piece(const GradedPiece& piece) {
  std::string out;
  if (!piece.h.is_one()) out += piece.h.to_factored_string() + "*";
  if (piece.p == 1) out += "y*";
  else if (piece.p != 0) out += "y^" + std::to_string(piece.p) + "*";
  return out + "k[z]";
}

namespace {

struct Result {
  Json json;
  std::string text;
  int code = kExitOk;
};

using Action = std::function<Result()>;

std::string sign_text(int sign) { return sign > 0 ? "+1" : "-1"; }

std::string describe(const PicElement& F) {
  const SignRank sr = sign_rank(F);
  std::ostringstream os;
  os << F.to_string() << "\n"
     << "normal form (a, b, J) = (" << sign_text(F.a) << ", " << F.b << ", " << F.J << ")\n"
     << "sign " << sign_text(sr.sign) << ", rank " << sr.rank << "\n";
  return os.str();
}

Result pic_result(const PicElement& F) { return Result{to_json(F), describe(F)}; }

std::string describe(const AdmissibleForm& form) {
  std::ostringstream os;
  os << "admissible pair (J, n) = (" << form.pair.J << ", " << form.pair.n << ")\n"
     << "conjugator g = " << form.conjugator << "\n"
     << "g F g^-1 = " << PicElement{1, form.pair.n, form.pair.J} << "\n";
  return os.str();
}

FinSet parse_set_option(std::string text) {
  std::erase(text, '{');
  std::erase(text, '}');
  return parse_int_list(text);
}

std::string describe(const ProjectiveSum& sum) {
  std::string out;
  for (std::size_t k = 0; k < sum.size(); ++k) {
    if (k > 0) out += " + ";
    out += "iota_" + sum[k].J.to_string() + " A";
    if (sum[k].shift != 0) out += "<" + std::to_string(sum[k].shift) + ">";
  }
  return out.empty() ? "0" : out;
}

std::string shifts_text(const std::vector<Int>& shifts) {
  std::string out;
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    if (k > 0) out += " + ";
    out += "A<" + std::to_string(shifts[k]) + ">";
  }
  return out.empty() ? "0" : out;
}

std::string lattice_text(const GradedLattice& L) {
  std::ostringstream os;
  os << "window [" << L.lo() << ", " << L.hi() << "]\n";
  for (Int m = L.lo(); m <= L.hi(); ++m) {
    os << "  g_" << m << " = " << L.generator(m) << "\n";
  }
  os << "  g_m = g_" << L.hi() << " for m > " << L.hi() << "; g_m = g_{m+1}*(z+m) for m < "
     << L.lo() << "\n";
  return os.str();
}

GradedLattice summand_lattice(const RankOneSummand& s) { return iota_lattice(s.J, s.shift); }

std::string support_text(const std::vector<std::pair<Rational, int>>& support) {
  if (support.empty()) return "empty\n";
  std::string out;
  for (const auto& [point, count] : support) {
    out += "  z = " + rational_to_string(point) + " : " + std::to_string(count) + "\n";
  }
  return out;
}

Json support_json(const std::vector<std::pair<Rational, int>>& support) {
  Json out = Json::array();
  for (const auto& [point, count] : support) {
    out.push_back(Json{{"point", rational_to_string(point)}, {"count", count}});
  }
  return out;
}

void add_pic_commands(CLI::App& app, Action& action) {
  auto* pic = app.add_subcommand("pic", "Picard group arithmetic on expressions like \"S^2 * i{0,2} * w\"");
  pic->require_subcommand(1);

  auto expr = std::make_shared<std::string>();
  auto other = std::make_shared<std::string>();
  auto exponent = std::make_shared<Int>(0);

  auto* eval = pic->add_subcommand("eval", "Normal form, sign and rank");
  eval->add_option("expr", *expr, "Picard expression")->required();
  eval->callback([&action, expr] {
    action = [expr] { return pic_result(parse_expression(*expr)); };
  });

  auto* pow = pic->add_subcommand("pow", "k-th power");
  pow->add_option("expr", *expr, "Picard expression")->required();
  pow->add_option("k", *exponent, "Exponent (may be negative)")->required();
  pow->callback([&action, expr, exponent] {
    action = [expr, exponent] { return pic_result(power(parse_expression(*expr), *exponent)); };
  });

  auto* inv = pic->add_subcommand("inv", "Inverse");
  inv->add_option("expr", *expr, "Picard expression")->required();
  inv->callback([&action, expr] {
    action = [expr] { return pic_result(inverse(parse_expression(*expr))); };
  });

  auto* conj = pic->add_subcommand("conj", "g * F * g^-1");
  conj->add_option("g", *other, "Conjugating element")->required();
  conj->add_option("expr", *expr, "Element F")->required();
  conj->callback([&action, expr, other] {
    action = [expr, other] {
      return pic_result(conjugate(parse_expression(*other), parse_expression(*expr)));
    };
  });

  auto* canonical = pic->add_subcommand("canonical", "Admissible form S^n iota_J and conjugator");
  canonical->add_option("expr", *expr, "Generative Picard expression")->required();
  canonical->callback([&action, expr] {
    action = [expr] {
      const AdmissibleForm form = canonical_admissible(parse_expression(*expr));
      return Result{to_json(form), describe(form)};
    };
  });
}

void add_classify_commands(CLI::App& app, Action& action) {
  auto* classify = app.add_subcommand("classify", "Conjugacy classes of generative elements");
  classify->require_subcommand(1);
  auto first = std::make_shared<std::string>();
  auto second = std::make_shared<std::string>();
  auto n = std::make_shared<Int>(1);

  auto* canonical = classify->add_subcommand("canonical", "Admissible form and necklace class");
  canonical->add_option("expr", *first, "Generative Picard expression")->required();
  canonical->callback([&action, first] {
    action = [first] {
      const AdmissibleForm form = canonical_admissible(parse_expression(*first));
      const NecklaceClass necklace = necklace_canonical(form.pair);
      Json j = to_json(form);
      j["necklace"] = to_json(necklace);
      return Result{j, describe(form) + "necklace class (" + necklace.representative.J.to_string() +
                           ", " + std::to_string(necklace.representative.n) + ")\n"};
    };
  });

  auto* same = classify->add_subcommand("same-class", "Whether two generative elements are conjugate");
  same->add_option("F", *first, "First expression")->required();
  same->add_option("G", *second, "Second expression")->required();
  same->callback([&action, first, second] {
    action = [first, second] {
      const bool same_class = same_morita_class(parse_expression(*first), parse_expression(*second));
      return Result{Json{{"same_class", same_class}}, same_class ? "true\n" : "false\n"};
    };
  });

  auto* count = classify->add_subcommand("count", "Number of classes of rank n");
  count->add_option("n", *n, "Rank")->required();
  count->callback([&action, n] {
    action = [n] {
      const auto c = morita_class_count(*n);
      return Result{Json{{"n", *n}, {"classes", c}}, std::to_string(c) + "\n"};
    };
  });
}

void add_necklace_commands(CLI::App& app, Action& action) {
  auto* necklace = app.add_subcommand("necklace", "Binary necklaces under rotation");
  necklace->require_subcommand(1);
  auto n = std::make_shared<Int>(1);

  auto* count = necklace->add_subcommand("count", "Closed-form necklace count");
  count->add_option("n", *n, "Necklace length")->required();
  count->callback([&action, n] {
    action = [n] {
      const auto c = necklace_count(*n);
      return Result{Json(c), std::to_string(c) + "\n"};
    };
  });

  auto* enumerate = necklace->add_subcommand("enum", "List every necklace class");
  enumerate->add_option("n", *n, "Necklace length")->required();
  enumerate->callback([&action, n] {
    action = [n] {
      Json j = Json::array();
      std::string text;
      for (const auto& c : necklace_enumerate(*n)) {
        j.push_back(to_json(c));
        text += "(" + c.representative.J.to_string() + ", " + std::to_string(*n) + ")\n";
      }
      return Result{j, text};
    };
  });
}

struct RingArgs {
  std::string J;
  Int n = 1;
  Int lo = -3;
  Int hi = 3;
  Int window = 3;
};

void add_ring_commands(CLI::App& app, Action& action) {
  auto* ring = app.add_subcommand("ring", "The rings S(J, n) graded equivalent to A");
  ring->require_subcommand(1);
  auto args = std::make_shared<RingArgs>();
  auto add_pair = [args](CLI::App* cmd) {
    cmd->add_option("--J", args->J, "Subset of {0..n-1}, e.g. 0,2 (empty by default)");
    cmd->add_option("--n", args->n, "Rank n >= 1")->required();
  };

  auto* present_cmd = ring->add_subcommand("present", "Generalized Weyl algebra presentation");
  add_pair(present_cmd);
  present_cmd->callback([&action, args] {
    action = [args] {
      const GWAPresentation p = present(parse_set_option(args->J), args->n);
      std::ostringstream os;
      os << "W(f, " << p.n << ") with f = " << p.f.to_factored_string() << "\n"
         << "S(J, n) = k[z] + " << p.idealizer_factor.to_factored_string() << " * W\n";
      for (const auto& r : p.relations) os << "  " << r << "\n";
      return Result{to_json(p), os.str()};
    };
  });

  auto pieces_action = [args](bool oracle) {
    return [args, oracle] {
      const FinSet J = parse_set_option(args->J);
      const RingPieces pieces = oracle ? ring_pieces_oracle(J, args->n, args->lo, args->hi)
                                       : ring_pieces(J, args->n, args->lo, args->hi);
      std::string text;
      for (const auto& [j, piece] : pieces) {
        text += "S_" + std::to_string(j) + " = " + format_piece(piece) + "\n";
      }
      return Result{to_json(pieces), text};
    };
  };
  for (const bool oracle : {false, true}) {
    auto* cmd = ring->add_subcommand(oracle ? "oracle" : "pieces",
                                     oracle ? "Graded pieces from the lattice computation"
                                            : "Graded pieces from the closed form");
    add_pair(cmd);
    cmd->add_option("--min", args->lo, "Lowest degree j");
    cmd->add_option("--max", args->hi, "Highest degree j");
    cmd->callback([&action, pieces_action, oracle] { action = pieces_action(oracle); });
  }

  auto* verify = ring->add_subcommand("verify", "Ring closure, GWA embedding and oracle agreement");
  add_pair(verify);
  verify->add_option("--window", args->window, "Degree window");
  verify->callback([&action, args] {
    action = [args] {
      const FinSet J = parse_set_option(args->J);
      const Int w = capped_window(args->window);
      const bool closure = verify_ring_closure(J, args->n, w);
      const bool embedding = verify_gwa_embedding(J, args->n);
      bool oracle = true;
      for (Int j = -w; j <= w; ++j) {
        oracle = oracle && twisted_endo_piece_oracle(J, args->n, j) ==
                               graded_piece_closed_form(J, args->n, j);
      }
      auto yes = [](bool b) { return std::string(b ? "pass" : "FAIL"); };
      Result r{Json{{"closure", closure}, {"embedding", embedding}, {"oracle", oracle}},
               "ring closure: " + yes(closure) + "\nGWA embedding: " + yes(embedding) +
                   "\noracle agreement: " + yes(oracle) + "\n"};
      r.code = closure && embedding && oracle ? kExitOk : kExitDomainError;
      return r;
    };
  });
}

void add_mod_commands(CLI::App& app, Action& action) {
  auto* mod = app.add_subcommand("mod", "Rank-one graded projectives such as \"{0,3}<1>\" or \"A<2>\"");
  mod->require_subcommand(1);
  auto first = std::make_shared<std::string>();
  auto second = std::make_shared<std::string>();

  auto* dset = mod->add_subcommand("dset", "Set of j with simple factor X<j>, as exceptions to [0, inf)");
  dset->add_option("module", *first, "Module")->required();
  dset->callback([&action, first] {
    action = [first] {
      const RankOneSummand s = parse_summand(*first);
      const DSet from_lattice = lattice_dset(summand_lattice(s));
      if (!(from_lattice == to_dset(s.J, s.shift))) {
        throw Unsupported("lattice and closed-form DSets disagree for " + *first);
      }
      return Result{to_json(from_lattice), "exceptions " + from_lattice.exceptions.to_string() + "\n"};
    };
  });

  auto* lattice = mod->add_subcommand("lattice", "Degreewise generators inside D");
  lattice->add_option("module", *first, "Module")->required();
  lattice->callback([&action, first] {
    action = [first] {
      const GradedLattice L = summand_lattice(parse_summand(*first));
      return Result{to_json(L), lattice_text(L)};
    };
  });

  auto* hom = mod->add_subcommand("hom", "Generator h of hom(P, Q) inside k(z)");
  hom->add_option("P", *first, "Source")->required();
  hom->add_option("Q", *second, "Target")->required();
  hom->callback([&action, first, second] {
    action = [first, second] {
      const RationalFunction h = hom_generator(summand_lattice(parse_summand(*first)),
                                               summand_lattice(parse_summand(*second)));
      return Result{to_json(h), h.to_string() + "\n"};
    };
  });

  auto* coker = mod->add_subcommand("coker", "Support of Q / hP for the maximal embedding");
  coker->add_option("P", *first, "Source")->required();
  coker->add_option("Q", *second, "Target")->required();
  coker->callback([&action, first, second] {
    action = [first, second] {
      const auto support = cokernel_support(summand_lattice(parse_summand(*first)),
                                            summand_lattice(parse_summand(*second)));
      return Result{support_json(support), support_text(support)};
    };
  });
}

void add_k0_commands(CLI::App& app, Action& action) {
  auto* k0 = app.add_subcommand("k0", "Graded K_0 of A; sums like \"{1,3} + {0,1,2} + A<1>\"");
  k0->require_subcommand(1);
  auto first = std::make_shared<std::string>();
  auto second = std::make_shared<std::string>();

  auto* normalize = k0->add_subcommand("normalize", "Chain form of a direct sum");
  normalize->add_option("sum", *first, "Direct sum")->required();
  normalize->callback([&action, first] {
    action = [first] {
      const ProjectiveSum chain = normalize_sum(parse_sum(*first));
      return Result{to_json(chain), describe(chain) + "\n"};
    };
  });

  auto* iso = k0->add_subcommand("iso", "Isomorphism test for direct sums");
  iso->add_option("first", *first, "Direct sum")->required();
  iso->add_option("second", *second, "Direct sum")->required();
  iso->callback([&action, first, second] {
    action = [first, second] {
      const bool same = iso_test(parse_sum(*first), parse_sum(*second));
      return Result{Json{{"isomorphic", same}}, same ? "true\n" : "false\n"};
    };
  });

  auto* witness = k0->add_subcommand("witness", "Free complement for iota_J A, J of positive integers");
  witness->add_option("J", *first, "Set such as 1,3")->required();
  witness->callback([&action, first] {
    action = [first] {
      const FinSet J = parse_set_option(*first);
      const StablyFreeWitness w = stably_free_witness(J);
      return Result{to_json(w), "iota_" + J.to_string() + " A + " + shifts_text(w.adds) + " = " +
                                    shifts_text(w.result) + "\n"};
    };
  });

  auto* theta = k0->add_subcommand("theta", "Image of sum c_J [iota_J A] in Pic");
  theta->add_option("combination", *first, "Combination such as \"{0,3} - A\"")->required();
  theta->callback([&action, first] {
    action = [first] { return pic_result(theta_map(parse_combination(*first))); };
  });

  auto* klass = k0->add_subcommand("class", "Class in K_0 on the basis [A<n>]");
  klass->add_option("sum", *first, "Direct sum")->required();
  klass->callback([&action, first] {
    action = [first] {
      const K0Class c = k0_class(parse_sum(*first));
      std::string text;
      for (const auto& [n, coefficient] : c.coefficients) {
        if (!text.empty()) text += " + ";
        text += std::to_string(coefficient) + "[A<" + std::to_string(n) + ">]";
      }
      return Result{to_json(c), (text.empty() ? "0" : text) + "\n"};
    };
  });
}

struct VerifyArgs {
  std::string suite = "all";
};

void add_verify_command(CLI::App& app, Action& action, const Int& window, const std::uint64_t& seed) {
  auto args = std::make_shared<VerifyArgs>();
  auto* verify = app.add_subcommand("verify", "Run invariant sweeps");
  verify->add_option("--suite", args->suite, "Suite name or 'all'");
  verify->callback([&action, args, &window, &seed] {
    action = [args, &window, &seed] {
      std::vector<std::string> names;
      if (args->suite == "all") names = suite_names();
      else names.push_back(args->suite);
      const VerifyOptions options{capped_window(window), seed};
      Json suites = Json::array();
      std::ostringstream os;
      bool ok = true;
      for (const auto& name : names) {
        const SuiteReport report = run_suite(name, options);
        ok = ok && report.ok();
        suites.push_back(Json{{"name", report.name},
                              {"passed", report.passed},
                              {"failed", report.failed},
                              {"failures", report.failures}});
        os << (report.ok() ? "PASS " : "FAIL ") << report.name << ": " << report.passed
           << " passed, " << report.failed << " failed\n";
        for (const auto& f : report.failures) os << "    " << f << "\n";
      }
      Result r{Json{{"ok", ok}, {"window", options.window}, {"seed", options.seed}, {"suites", suites}},
               os.str()};
      r.code = ok ? kExitOk : kExitDomainError;
      return r;
    };
  });
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Morita theory of the first Weyl algebra"};
  app.name("weylgraded");
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  Int window = 3;
  std::uint64_t seed = 1;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--window", window, "Sweep window for verification")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized sweeps");

  Action action;
  add_pic_commands(app, action);
  add_classify_commands(app, action);
  add_necklace_commands(app, action);
  add_ring_commands(app, action);
  add_mod_commands(app, action);
  add_k0_commands(app, action);
  add_verify_command(app, action, window, seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Prints help or the error message; help exits with status 0.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsageError;
  }
  if (!action) {
    err << "error: no command given\n";
    return kExitUsageError;
  }
  try {
    const Result result = action();
    if (json) out << result.json.dump(2) << "\n";
    else out << result.text;
    return result.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace weylgraded::cli
