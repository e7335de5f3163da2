#include "cli.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>

#include "CLI11.hpp"

#include "g2aff/affine.hpp"
#include "g2aff/character.hpp"
#include "g2aff/errors.hpp"
#include "g2aff/json_io.hpp"
#include "g2aff/limit.hpp"
#include "g2aff/minaff.hpp"
#include "g2aff/selftest.hpp"

namespace g2aff::cli {

namespace {

using json_io::Json;

struct Request {
  bool json = false;
  bool quiet = false;
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t node = 1;
  std::int64_t n = 0;
  std::int64_t r = 1;
  std::int64_t p_max = 4;
  std::int64_t degree = 6;
  std::int64_t n_max = 12;
  std::int64_t scale = 1;
  std::vector<int> nodes{1, 2};
  std::string variant = "first";
};

void print_decomposition(const IrrDecomposition& d, const Request& req, std::ostream& out, const Weight& lambda) {
  std::vector<std::pair<Weight, Int128>> parts(d.parts().rbegin(), d.parts().rend());
  if (req.json) {
    Json dims = Json::array();
    for (const auto& [mu, mult] : parts) dims.push_back(json_io::integer(weyl_dimension(mu)));
    Json doc = {{"lambda", json_io::weight(lambda)},
                {"decomposition", json_io::decomposition(d)},
                {"summand_dims", dims},
                {"total_dim", json_io::integer(d.total_dimension())}};
    out << doc.dump() << "\n";
    return;
  }
  if (!req.quiet) out << "lambda = " << to_string(lambda) << "\n";
  for (const auto& [mu, mult] : parts) {
    out << "V" << to_string(mu) << "  mult " << to_string(mult) << "  dim " << to_string(weyl_dimension(mu)) << "\n";
  }
  out << "total " << to_string(d.total_dimension()) << "\n";
}

int cmd_decompose(const Request& req, std::ostream& out) {
  const HighestWeightInput in(req.k, req.l);
  print_decomposition(decompose_graded_limit(in), req, out, in.lambda());
  return kOk;
}

int cmd_kr(const Request& req, std::ostream& out) {
  const Weight lambda = req.node == 1 ? Weight{req.n, 0} : Weight{0, req.n};
  print_decomposition(kr_decomposition(static_cast<int>(req.node), req.n), req, out, lambda);
  return kOk;
}

int cmd_character(const Request& req, std::ostream& out) {
  const HighestWeightInput in(req.k, req.l);
  const FormalCharacter chi = graded_limit_character(in);
  if (req.json) {
    out << json_io::character(chi).dump() << "\n";
    return kOk;
  }
  if (!req.quiet) out << "ch L" << to_string(in.lambda()) << ": " << chi.size() << " weights\n";
  for (auto it = chi.terms().rbegin(); it != chi.terms().rend(); ++it) {
    out << "e^" << to_string(it->first) << "  " << to_string(it->second) << "\n";
  }
  if (!req.quiet) out << "dimension " << to_string(chi.total()) << "\n";
  return kOk;
}

int cmd_dim(const Request& req, std::ostream& out) {
  const HighestWeightInput in(req.k, req.l);
  const Int128 dim = graded_limit_dimension(in);
  if (req.json) {
    out << Json{{"lambda", json_io::weight(in.lambda())}, {"dim", json_io::integer(dim)}}.dump() << "\n";
  } else if (req.quiet) {
    out << to_string(dim) << "\n";
  } else {
    out << "dim L" << to_string(in.lambda()) << " = " << to_string(dim) << "\n";
  }
  return kOk;
}

int cmd_monomial(const Request& req, std::ostream& out) {
  const HighestWeightInput in(req.k, req.l);
  const auto variant = req.variant == "first" ? MonomialVariant::kFirst : MonomialVariant::kSecond;
  const DominantMonomial m = highest_l_weight_monomials(in, variant);
  if (req.json) {
    out << json_io::monomial(m).dump() << "\n";
  } else {
    out << m.to_string() << "\n";
  }
  return kOk;
}

int cmd_relations(const Request& req, std::ostream& out) {
  const HighestWeightInput in(req.k, req.l);
  const auto relations = relations_of_M(in);
  if (req.json) {
    out << json_io::relations(relations, in).dump() << "\n";
    return kOk;
  }
  for (const auto& r : relations) out << r.to_string(in) << "\n";
  return kOk;
}

int cmd_rho_table(const Request& req, std::ostream& out) {
  const HighestWeightInput in(req.k, req.l);
  const auto table = rho_table(in, req.p_max);
  if (req.json) {
    out << json_io::rho_table(table).dump() << "\n";
    return kOk;
  }
  if (!req.quiet) {
    out << "k=" << in.k() << " r=" << in.r() << " s=" << in.s() << "; root [m,n,p] = m alpha1 + n alpha2 + p delta\n";
  }
  for (const auto& [gamma, value] : table) out << gamma.to_string() << "  " << value << "\n";
  return kOk;
}

int cmd_demazure(const Request& req, std::ostream& out) {
  const HighestWeightInput in(req.k, req.l);
  const auto sequence = demazure_sequence(in);
  if (req.json) {
    out << json_io::demazure(sequence).dump() << "\n";
    return kOk;
  }
  out << "D(";
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i > 0) out << ", ";
    out << to_string(sequence[i].finite) << " + " << sequence[i].multiplier << " Lambda0";
  }
  out << ")\n";
  return kOk;
}

int cmd_limit_check(const Request& req, std::ostream& out) {
  const NodeSet nodes(req.nodes.begin(), req.nodes.end());
  const ConvergenceResult result = convergence_check(nodes, req.degree, req.n_max);
  const TruncatedSeries limit = product_series(nodes, req.degree);
  if (req.json) {
    Json doc = {{"J", Json(std::vector<int>(nodes.begin(), nodes.end()))},
                {"D", req.degree},
                {"n_max", req.n_max},
                {"found", result.first_stable_n.has_value()},
                {"n", result.first_stable_n ? Json(*result.first_stable_n) : Json(nullptr)},
                {"agreeing", result.agreeing_n},
                {"limit", json_io::series(limit)}};
    out << doc.dump() << "\n";
    return kOk;
  }
  out << "J = {";
  bool first = true;
  for (int j : nodes) {
    out << (first ? "" : ",") << j;
    first = false;
  }
  out << "}, D = " << req.degree << ": ";
  if (result.first_stable_n) {
    out << "stable from n = " << *result.first_stable_n << "\n";
  } else {
    out << "not found for n <= " << req.n_max << "\n";
  }
  if (!req.quiet) {
    out << "limit coefficients (m n c):\n";
    for (std::int64_t m = 0; m <= limit.degree(); ++m) {
      for (std::int64_t n = 0; n <= limit.degree(); ++n) {
        if (limit.at(m, n) != 0) out << m << " " << n << " " << to_string(limit.at(m, n)) << "\n";
      }
    }
  }
  return kOk;
}

int cmd_lemma46(const Request& req, std::ostream& out) {
  const Rational det = factorial_matrix_det(req.r);
  const bool nonzero = det != 0;
  if (req.json) {
    out << Json{{"r", req.r}, {"det", det.str()}, {"nonzero", nonzero}}.dump() << "\n";
  } else {
    out << "det = " << det.str() << ", nonzero: " << (nonzero ? "true" : "false") << "\n";
  }
  return kOk;
}

int cmd_selftest(const Request& req, std::ostream& out) {
  const SelftestReport report = run_selftest(req.scale);
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.passed ? 1 : 0;
  if (req.json) {
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << Json{{"scale", req.scale}, {"passed", report.all_passed()}, {"checks", checks}}.dump() << "\n";
  } else {
    for (const auto& c : report.checks) {
      if (c.passed && req.quiet) continue;
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed) out << ": " << c.detail;
      out << "\n";
    }
    out << "selftest: " << passed << "/" << report.checks.size() << " passed\n";
  }
  return report.all_passed() ? kOk : kSelftestFailure;
}

const CLI::Range kNonNegative(std::int64_t{0}, std::numeric_limits<std::int64_t>::max(), "NONNEGATIVE");
const CLI::Range kPositive(std::int64_t{1}, std::numeric_limits<std::int64_t>::max(), "POSITIVE");

void add_weight_args(CLI::App* sub, Request& req) {
  sub->add_option("k", req.k, "coefficient of omega1")->required()->check(kNonNegative);
  sub->add_option("l", req.l, "coefficient of omega2")->required()->check(kNonNegative);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Graded limits of minimal affinizations of type G2", "g2aff"};
  app.require_subcommand(1);
  app.add_flag("--json", req.json, "emit JSON");
  app.add_flag("--quiet", req.quiet, "omit headers and summaries in text output");

  std::function<int(const Request&, std::ostream&)> handler;
  auto subcommand = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  add_weight_args(subcommand("decompose", "decomposition of L(k omega1 + l omega2) into irreducibles", cmd_decompose), req);
  add_weight_args(subcommand("character", "full character of the graded limit", cmd_character), req);
  add_weight_args(subcommand("dim", "dimension of the graded limit", cmd_dim), req);
  auto* monomial = subcommand("monomial", "dominant monomial of the minimal affinization", cmd_monomial);
  add_weight_args(monomial, req);
  monomial->add_option("--variant", req.variant, "first or second")->check(CLI::IsMember({"first", "second"}));
  add_weight_args(subcommand("relations", "defining relations of M(lambda)", cmd_relations), req);
  auto* rho = subcommand("rho-table", "rho on positive real affine roots", cmd_rho_table);
  add_weight_args(rho, req);
  rho->add_option("--p-max", req.p_max, "largest delta coefficient")->check(CLI::Range(2, 1000));
  add_weight_args(subcommand("demazure-seq", "weight sequence of the multiple Demazure module", cmd_demazure), req);
  auto* kr = subcommand("kr", "Kirillov-Reshetikhin decomposition", cmd_kr);
  kr->add_option("node", req.node, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  kr->add_option("n", req.n, "multiple of the fundamental weight")->required()->check(kNonNegative);
  auto* limit = subcommand("limit-check", "compare normalized characters with the limit product", cmd_limit_check);
  limit->add_option("-J,--nodes", req.nodes, "node set J, e.g. 1,2")->delimiter(',')->check(CLI::IsMember({1, 2}));
  limit->add_option("-D,--degree", req.degree, "truncation box size")->check(kPositive);
  limit->add_option("--n-max", req.n_max, "largest n tried")->check(kPositive);
  auto* lemma = subcommand("lemma46", "exact determinant of the factorial matrix", cmd_lemma46);
  lemma->add_option("r", req.r, "matrix size minus one")->required()->check(kPositive);
  auto* selftest = subcommand("selftest", "run the invariant suites", cmd_selftest);
  selftest->add_option("--scale", req.scale, "bound multiplier")->check(kPositive);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("g2aff");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    return handler(req, out);
  } catch (const InvalidArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputationError;
  }
}

}  // namespace g2aff::cli
