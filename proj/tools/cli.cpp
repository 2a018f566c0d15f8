#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobenius/gap_polynomials.hpp"
#include "frobenius/graded_hilbert.hpp"
#include "frobenius/semigroup.hpp"

namespace frobenius::cli {

using nlohmann::json;

Environment Environment::from_process() {
  Environment env;
  if (const char* raw = std::getenv("SEMIGROUP_MAX_BOUND"); raw != nullptr && *raw != '\0') {
    std::int64_t v = 0;
    const std::string_view s(raw);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v <= 0)
      throw ParseError("SEMIGROUP_MAX_BOUND must be a positive integer, got '" + std::string(s) + "'", 1);
    env.max_bound = v;
  }
  return env;
}

json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

json to_json(const Rational& v) {
  if (denominator(v) == 1) return to_json(Integer(numerator(v)));
  return v.str();
}

json to_json(const IntPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : sparse_terms(p)) terms.push_back(json::array({e, to_json(c)}));
  return terms;
}

json to_json(const BivariatePolynomial& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(json::array({it->first.i, it->first.j, to_json(it->second)}));
  return terms;
}

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coefficients", coeffs}};
}

namespace {

std::int64_t parse_int(const std::string& text, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError(std::string("invalid ") + what + " '" + text + "'", 1);
  return v;
}

std::vector<std::int64_t> parse_ints(const std::vector<std::string>& texts, const char* what) {
  std::vector<std::int64_t> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_int(t, what));
  return out;
}

std::string join(const std::vector<std::int64_t>& values, const char* sep = ",") {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size(); ++i) s << (i ? sep : "") << values[i];
  return s.str();
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// The shared state of one invocation; each subcommand fills `inputs` and
// `result` and prints its own text form.
struct Invocation {
  const Environment& env;
  std::ostream& out;
  bool as_json = false;
  std::string command;
  json inputs = json::object();
  json result = json::object();

  SemigroupTable table(const GeneratorSet& A) const {
    return SemigroupTable::build(A, TableLimits{env.max_bound});
  }

  void check_pair_cap(std::int64_t a, std::int64_t b) const {
    // Builds the table once purely to enforce the configured cap.
    (void)table(GeneratorSet::validate({a, b}));
  }

  void emit() const {
    if (as_json) out << json{{"command", command}, {"inputs", inputs}, {"result", result}}.dump(2) << '\n';
  }
};

GeneratorSet admissible_generators(const std::vector<std::string>& raw) {
  const auto values = parse_ints(raw, "generator");
  auto A = GeneratorSet::validate(values);
  A.require_admissible();
  return A;
}

int cmd_frobenius(Invocation& inv, const std::vector<std::string>& raw, bool show_gaps,
                  std::optional<std::int64_t> witness) {
  const auto A = admissible_generators(raw);
  const auto t = inv.table(A);
  inv.inputs = {{"generators", A.elements()}};
  if (witness) inv.inputs["witness"] = *witness;
  inv.result = {{"frobenius", t.frobenius()},
                {"genus", t.genus()},
                {"gap_count", t.gaps().size()},
                {"conductor_bound", t.bound()},
                {"symmetric", t.symmetric()}};
  if (show_gaps) inv.result["gaps"] = t.gaps();

  std::optional<Representation> rep;
  if (witness) {
    rep = t.represent(*witness);
    inv.result["witness"] = rep ? json{{"n", *witness}, {"coefficients", rep->coefficients}} : json(nullptr);
  }
  if (inv.as_json) {
    inv.emit();
    return kOk;
  }
  inv.out << "frobenius=" << t.frobenius() << " genus=" << t.genus() << '\n';
  if (show_gaps) inv.out << "gaps=" << join(t.gaps()) << '\n';
  if (witness) {
    inv.out << "witness " << *witness;
    if (!rep) {
      inv.out << ": none (gap)\n";
    } else {
      inv.out << " =";
      bool first = true;
      for (std::size_t i = 0; i < rep->coefficients.size(); ++i) {
        if (rep->coefficients[i] == 0) continue;
        inv.out << (first ? " " : " + ") << rep->coefficients[i] << '*' << A.elements()[i];
        first = false;
      }
      if (first) inv.out << " 0";
      inv.out << '\n';
    }
  }
  return kOk;
}

int cmd_gaps(Invocation& inv, const std::vector<std::string>& raw) {
  const auto A = admissible_generators(raw);
  const auto t = inv.table(A);
  inv.inputs = {{"generators", A.elements()}};
  inv.result = {{"genus", t.genus()}, {"gaps", t.gaps()}};
  if (inv.as_json)
    inv.emit();
  else
    inv.out << "gaps=" << join(t.gaps()) << '\n';
  return kOk;
}

int cmd_gap_poly(Invocation& inv, const std::vector<std::string>& raw) {
  const auto A = admissible_generators(raw);
  const auto t = inv.table(A);
  const auto f = gap_polynomial(t);
  inv.inputs = {{"generators", A.elements()}};
  inv.result = {{"f", to_json(f)}, {"f_text", to_string(f)}};
  std::ostringstream text;
  text << "f=" << to_string(f) << '\n';
  if (!f.is_zero()) {
    const auto g = g_polynomial(t);
    const auto f_hat = reciprocal(f);
    const auto violations = epsilon_symmetry_violations(t);
    inv.result["g"] = to_json(g);
    inv.result["g_text"] = to_string(g);
    inv.result["reciprocal"] = to_json(f_hat);
    inv.result["reciprocal_text"] = to_string(f_hat);
    inv.result["symmetry_violations"] = violations;
    text << "g=" << to_string(g) << '\n'
         << "reciprocal=" << to_string(f_hat) << '\n'
         << "symmetry_violations=" << join(violations) << '\n';
  }
  if (inv.as_json)
    inv.emit();
  else
    inv.out << text.str();
  return kOk;
}

struct PairReport {
  bool functional_equation = false;
  bool reciprocal_duality = false;
  bool series_identity = false;
  bool rank_nullity = false;

  bool all() const { return functional_equation && reciprocal_duality && series_identity && rank_nullity; }
};

PairReport verify_pair(std::int64_t a, std::int64_t b, std::optional<std::int64_t> order) {
  PairReport r;
  r.functional_equation = verify_functional_equation(a, b);
  r.reciprocal_duality = reciprocal_duality(a, b);
  const std::int64_t n = order.value_or(a * b + 10);
  if (n < 0) throw DomainError("order must be nonnegative");
  r.series_identity = series_identity_check(a, b, static_cast<std::size_t>(n));
  r.rank_nullity = rank_nullity_check(a, b, 3 * a * b);
  return r;
}

json report_json(const PairReport& r) {
  return {{"functional_equation", r.functional_equation},
          {"reciprocal_duality", r.reciprocal_duality},
          {"series_identity", r.series_identity},
          {"rank_nullity", r.rank_nullity}};
}

int cmd_verify(Invocation& inv, const std::vector<std::string>& raw, std::optional<std::int64_t> sweep,
               std::optional<std::int64_t> order) {
  if (sweep) {
    if (!raw.empty()) throw ParseError("verify takes either a pair or --sweep, not both", 1);
    inv.inputs = {{"sweep", *sweep}};
    if (order) inv.inputs["order"] = *order;
    std::int64_t pairs = 0, passed = 0;
    json failures = json::array();
    for (std::int64_t b = 3; b <= *sweep; ++b)
      for (std::int64_t a = 2; a < b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        inv.check_pair_cap(a, b);
        ++pairs;
        const auto r = verify_pair(a, b, order);
        if (r.all()) {
          ++passed;
        } else {
          failures.push_back({{"a", a}, {"b", b}, {"checks", report_json(r)}});
          if (!inv.as_json) inv.out << "FAIL " << a << ' ' << b << '\n';
        }
      }
    inv.result = {{"pairs", pairs}, {"passed", passed}, {"failures", failures}};
    if (inv.as_json)
      inv.emit();
    else
      inv.out << pairs << " pairs, " << passed << " PASS\n";
    return passed == pairs ? kOk : kCheckFailed;
  }

  if (raw.size() != 2) throw ParseError("verify expects two integers a b, or --sweep B", 1);
  const auto a = parse_int(raw[0], "a");
  const auto b = parse_int(raw[1], "b");
  require_coprime_pair(a, b);
  inv.check_pair_cap(a, b);
  inv.inputs = {{"a", a}, {"b", b}};
  if (order) inv.inputs["order"] = *order;
  const auto r = verify_pair(a, b, order);
  inv.result = report_json(r);
  inv.result["all"] = r.all();
  if (inv.as_json) {
    inv.emit();
  } else {
    inv.out << "functional_equation " << pass_fail(r.functional_equation) << '\n'
            << "reciprocal_duality " << pass_fail(r.reciprocal_duality) << '\n'
            << "series_identity " << pass_fail(r.series_identity) << '\n'
            << "rank_nullity " << pass_fail(r.rank_nullity) << '\n';
  }
  return r.all() ? kOk : kCheckFailed;
}

int cmd_divide(Invocation& inv, const std::string& expr, const std::string& a_text, const std::string& b_text,
               bool kernel_only) {
  const auto g = BivariatePolynomial::parse(expr);
  const auto a = parse_int(a_text, "a");
  const auto b = parse_int(b_text, "b");
  require_coprime_pair(a, b, 1);
  const auto f = toric_binomial(a, b);
  const bool by_eval = in_kernel(g, a, b, KernelTest::evaluate);
  const bool by_div = in_kernel(g, a, b, KernelTest::divide);

  inv.inputs = {{"g", to_string(g)}, {"a", a}, {"b", b}};
  inv.result = {{"divisor", to_json(f)},
                {"divisor_text", to_string(f)},
                {"in_kernel_evaluate", by_eval},
                {"in_kernel_divide", by_div}};
  std::ostringstream text;
  if (kernel_only) {
    const auto image = phi_evaluate(g, a, b);
    inv.result["phi_text"] = to_string(image);
    text << "phi=" << to_string(image) << '\n';
  } else {
    const auto d = divide(g, f);
    inv.result["quotient"] = to_json(d.quotient);
    inv.result["quotient_text"] = to_string(d.quotient);
    inv.result["remainder"] = to_json(d.remainder);
    inv.result["remainder_text"] = to_string(d.remainder);
    text << "divisor=" << to_string(f) << '\n'
         << "quotient=" << to_string(d.quotient) << '\n'
         << "remainder=" << to_string(d.remainder) << '\n';
  }
  text << std::boolalpha << "in_kernel(evaluate)=" << by_eval << '\n' << "in_kernel(divide)=" << by_div << '\n';
  if (inv.as_json)
    inv.emit();
  else
    inv.out << text.str();
  return kOk;
}

int cmd_hilbert(Invocation& inv, const std::string& which, const std::string& a_text, const std::string& b_text,
                std::optional<std::string> n_text, std::optional<std::int64_t> order) {
  const auto kind = parse_hilbert_kind(which);
  if (!kind) throw ParseError("unknown series '" + which + "'", 1);
  std::int64_t n = 0;
  if (order)
    n = *order;
  else if (n_text)
    n = parse_int(*n_text, "order");
  else
    throw ParseError("hilbert needs an order N (positional or --order)", 1);
  if (n < 0) throw DomainError("order must be nonnegative");

  std::int64_t a = 0, b = 0;
  inv.inputs = {{"which", which}, {"order", n}};
  if (uses_pair(*kind)) {
    a = parse_int(a_text, "a");
    b = parse_int(b_text, "b");
    require_coprime_pair(a, b);
    inv.check_pair_cap(a, b);
    inv.inputs["a"] = a;
    inv.inputs["b"] = b;
  }
  if (n >= inv.env.max_bound) throw CapacityError("series order exceeds SEMIGROUP_MAX_BOUND");
  const auto h = hilbert_series(*kind, a, b, static_cast<std::size_t>(n));
  inv.result = to_json(h.series);
  inv.result["closed_form"] = h.closed_form;
  if (inv.as_json)
    inv.emit();
  else
    inv.out << to_string(h.series) << '\n';
  return kOk;
}

int cmd_rank_nullity(Invocation& inv, const std::string& a_text, const std::string& b_text,
                     std::optional<std::int64_t> order) {
  const auto a = parse_int(a_text, "a");
  const auto b = parse_int(b_text, "b");
  require_coprime_pair(a, b);
  inv.check_pair_cap(a, b);
  const std::int64_t nmax = order.value_or(3 * a * b);
  if (nmax >= inv.env.max_bound) throw CapacityError("nmax exceeds SEMIGROUP_MAX_BOUND");
  const auto d = GradedDims::tabulate(a, b, nmax);
  bool holds = true;
  json rows = json::array();
  std::ostringstream text;
  text << "n dimE dimR dimK\n";
  for (std::int64_t n = 0; n <= nmax; ++n) {
    holds = holds && d.dim_e(n) == d.dim_r(n) + d.dim_k(n);
    rows.push_back(json::array({n, d.dim_e(n), d.dim_r(n), d.dim_k(n)}));
    text << n << ' ' << d.dim_e(n) << ' ' << d.dim_r(n) << ' ' << d.dim_k(n) << '\n';
  }
  text << "rank_nullity " << pass_fail(holds) << '\n';
  inv.inputs = {{"a", a}, {"b", b}, {"nmax", nmax}};
  inv.result = {{"rows", rows}, {"holds", holds}};
  if (inv.as_json)
    inv.emit();
  else
    inv.out << text.str();
  return holds ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Numerical semigroups: Frobenius numbers, gap polynomials, and the kernel of x->t^a, y->t^b",
               "frobenius"};
  app.require_subcommand(1);
  app.fallthrough();
  Invocation inv{env, out};
  app.add_flag("--json", inv.as_json, "Emit a JSON envelope instead of text");

  std::vector<std::string> gens;
  bool show_gaps = false;
  std::optional<std::int64_t> witness, sweep, order;
  std::string expr, which, a_text, b_text;
  std::optional<std::string> n_text;
  std::vector<std::string> pair;

  auto* frob = app.add_subcommand("frobenius", "Frobenius number and genus of S(A)");
  frob->add_option("generators", gens, "Elements of A")->required();
  frob->add_flag("--gaps", show_gaps, "List the gaps");
  frob->add_option("--witness", witness, "Print a representation of n");

  auto* gaps = app.add_subcommand("gaps", "List the gaps of S(A)");
  gaps->add_option("generators", gens, "Elements of A")->required();

  auto* gpoly = app.add_subcommand("gap-poly", "Gap polynomial f_A, g_A and the reciprocal of f_A");
  gpoly->add_option("generators", gens, "Elements of A")->required();

  auto* verify = app.add_subcommand("verify", "Check the functional equation and its companions for {a,b}");
  verify->add_option("pair", pair, "a b")->expected(0, 2);
  verify->add_option("--sweep", sweep, "Check every coprime pair 2 <= a < b <= B");
  verify->add_option("--order", order, "Series truncation order (default ab+10)");

  auto* div = app.add_subcommand("divide", "Divide g by x^b - y^a in lex order");
  div->add_option("g", expr, "Polynomial in x, y")->required();
  div->add_option("a", a_text)->required();
  div->add_option("b", b_text)->required();

  auto* kern = app.add_subcommand("kernel", "Test g for membership in the kernel of x->t^a, y->t^b");
  kern->add_option("g", expr, "Polynomial in x, y")->required();
  kern->add_option("a", a_text)->required();
  kern->add_option("b", b_text)->required();

  auto* hilb = app.add_subcommand("hilbert", "Truncated Hilbert series");
  hilb->add_option("which", which,
                   "full_ring_degree | full_ring_frobenius | semigroup_ring | kernel | univariate")
      ->required();
  hilb->add_option("a", a_text, "a, or - when unused")->required();
  hilb->add_option("b", b_text, "b, or - when unused")->required();
  hilb->add_option("N", n_text, "Truncation order");
  hilb->add_option("--order", order, "Truncation order");

  auto* rn = app.add_subcommand("rank-nullity", "Tabulate dim E_n = dim R_n + dim K_n");
  rn->add_option("a", a_text)->required();
  rn->add_option("b", b_text)->required();
  rn->add_option("--order", order, "Largest n (default 3ab)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    inv.command = sub->get_name();
    if (sub == frob) return cmd_frobenius(inv, gens, show_gaps, witness);
    if (sub == gaps) return cmd_gaps(inv, gens);
    if (sub == gpoly) return cmd_gap_poly(inv, gens);
    if (sub == verify) return cmd_verify(inv, pair, sweep, order);
    if (sub == div) return cmd_divide(inv, expr, a_text, b_text, false);
    if (sub == kern) return cmd_divide(inv, expr, a_text, b_text, true);
    if (sub == hilb) return cmd_hilbert(inv, which, a_text, b_text, n_text, order);
    if (sub == rn) return cmd_rank_nullity(inv, a_text, b_text, order);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kParseError;
}

}  // namespace frobenius::cli
