// commacat <command> [args...] --spec <workspace.json> --out <report.json>
//          [--seed N] [--budget N] [--max-dim N]
//
// Exit codes: 0 ok, 1 validation failure, 2 budget exceeded, 3 spec error.

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commacat/jordan_holder.hpp"
#include "commacat/kgroup.hpp"
#include "support/acceptance.hpp"
#include "workspace.hpp"

using nlohmann::json;
using namespace commacat;
using namespace commacat::cli;

namespace {

enum Exit { kOk = 0, kValidation = 1, kBudget = 2, kSpec = 3 };

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4U];
    out += hex[digest[i] & 15U];
  }
  return out;
}

// --- serialization ----------------------------------------------------------

json to_json(const Matrix& m) { return m.to_rows(); }

json to_json(const RepObject& x) {
  json arrows = json::array();
  for (const auto& a : x.arrow_maps) arrows.push_back(to_json(a));
  return {{"dims", x.dims}, {"arrows", arrows}};
}

json to_json(const RepMorphism& m) {
  json comps = json::array();
  for (const auto& c : m.components) comps.push_back(to_json(c));
  return comps;
}

template <class Cat>
json object_json(const Cat& c, const typename Cat::Object& x) {
  return {{"describe", c.describe(x)}, {"a", to_json(x.a)}, {"b", to_json(x.b)}, {"alpha", to_json(x.alpha)},
          {"class", c.cls(x).to_string()}};
}

template <class Cat>
json morphism_json(const typename Cat::Morphism& m) {
  return {{"f", to_json(m.f)}, {"g", to_json(m.g)}};
}

json report_json(const VerificationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back(x.check + ": " + x.detail);
  return {{"checks", r.checks}, {"violations", v}};
}

json classes_json(const std::vector<ClassVector>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(c.to_string());
  return out;
}

// --- commands ---------------------------------------------------------------

struct Outcome {
  json result;
  int code = kOk;
  std::vector<std::string> violations;
};

void need(const std::vector<std::string>& args, std::size_t n, const char* usage) {
  if (args.size() != n) throw SpecError(std::string("usage: ") + usage);
}

template <class F>
auto with_object(const Workspace& ws, const std::string& name, F&& f) {
  const auto& o = ws.object(name);
  return std::visit(
      [&](const auto& c) {
        using O = typename std::decay_t<decltype(c)>::Object;
        return f(c, std::get<O>(o.value));
      },
      ws.context(o.context));
}

Outcome cmd_universal(const Workspace& ws, const std::string& which, const std::vector<std::string>& args) {
  need(args, 2, "kernel|cokernel|image <context> <morphism>");
  const auto& m = ws.morphism(args[1]);
  if (m.context != args[0]) throw SpecError("morphism '" + args[1] + "' lives in context '" + m.context + "'");
  return std::visit(
      [&](const auto& c) {
        using Cat = std::decay_t<decltype(c)>;
        const auto& mor = std::get<typename Cat::Morphism>(m.value);
        const auto u = which == "kernel" ? c.kernel(mor) : which == "cokernel" ? c.cokernel(mor) : image(c, mor);
        VerificationReport rep;
        Rng rng(ws.seed);
        verify_morphism_structure(c, mor, rng, ws.validation.samples, ws.validation.max_total_dim, rep, args[1]);
        Outcome out;
        out.result = {{"object", object_json(c, u.object)}, {"map", morphism_json<Cat>(u.map)},
                      {"verification", report_json(rep)}};
        for (const auto& v : rep.violations) out.violations.push_back(v.check + ": " + v.detail);
        out.code = rep.ok() ? kOk : kValidation;
        return out;
      },
      ws.context(m.context));
}

Outcome cmd_subobjects(const Workspace& ws, const std::vector<std::string>& args) {
  need(args, 2, "subobjects <context> <object>");
  if (ws.object(args[1]).context != args[0]) throw SpecError("object '" + args[1] + "' is not in context '" + args[0] + "'");
  return with_object(ws, args[1], [&](const auto& c, const auto& x) {
    json list = json::array();
    for (const auto& s : c.enumerate_subobjects(x)) list.push_back({{"class", c.cls(s.object).to_string()}, {"describe", c.describe(s.object)}});
    Outcome out;
    out.result = {{"count", list.size()}, {"subobjects", list}};
    return out;
  });
}

Outcome cmd_kclass(const Workspace& ws, const std::vector<std::string>& args) {
  need(args, 1, "kclass <object>");
  return with_object(ws, args[0], [&](const auto& c, const auto& x) {
    const auto d = decompose(c, x);
    const bool alpha_free = c.cls(x) == c.cls(c.make_object(x.a, x.b));
    Outcome out;
    out.result = {{"class", c.cls(x).to_string()},
                  {"class_A", d.a.to_string()},
                  {"class_B", d.b.to_string()},
                  {"witness_verified", d.verified},
                  {"class_of_zero_alpha_equal", alpha_free}};
    if (!d.verified) out.violations.push_back("decompose: witness sequence is not short exact");
    if (!alpha_free) out.violations.push_back("kclass: class depends on alpha");
    out.code = out.violations.empty() ? kOk : kValidation;
    return out;
  });
}

Outcome cmd_hn(const Workspace& ws, const std::vector<std::string>& args) {
  need(args, 2, "hn <stability> <object>");
  const auto it = ws.stability.find(args[0]);
  if (it == ws.stability.end()) throw SpecError("unknown stability '" + args[0] + "'");
  if (it->second.context != ws.object(args[1]).context) throw SpecError("stability and object live in different contexts");
  const auto& z = it->second.value;
  return with_object(ws, args[1], [&](const auto& c, const auto& x) {
    if (c.is_zero(x)) throw SpecError("hn needs a nonzero object");
    const auto hn = hn_filtration(z, c, x);
    json steps = json::array();
    for (const auto& s : hn.filtration.steps) steps.push_back({{"class", c.cls(s.object).to_string()}, {"describe", c.describe(s.object)}});
    json factors = json::array();
    json slopes = json::array();
    for (std::size_t i = 0; i < hn.filtration.factors.size(); ++i) {
      factors.push_back({{"class", hn.filtration.factor_classes[i].to_string()},
                         {"describe", c.describe(hn.filtration.factors[i])},
                         {"slope", hn.factor_slopes[i].to_string()}});
      slopes.push_back(hn.factor_slopes[i].to_string());
    }
    Outcome out;
    out.result = {{"length", hn.filtration.length()}, {"steps", steps}, {"factors", factors}, {"slopes", slopes},
                  {"semistable", hn.filtration.length() == 1}};
    return out;
  });
}

Outcome cmd_jh(const Workspace& ws, const std::vector<std::string>& args) {
  need(args, 1, "jh <object>");
  return with_object(ws, args[0], [&](const auto& c, const auto& x) {
    const auto jh = jh_filtration(c, x);
    json steps = json::array();
    for (const auto& s : jh.filtration.steps) steps.push_back({{"class", c.cls(s.object).to_string()}, {"describe", c.describe(s.object)}});
    Outcome out;
    out.result = {{"length", jh.length()},
                  {"steps", steps},
                  {"factor_classes", classes_json(jh.filtration.factor_classes)},
                  {"factor_multiset", classes_json(jh.factor_multiset())}};
    return out;
  });
}

Outcome cmd_scan(const Workspace& ws, const std::vector<std::string>& args) {
  need(args, 3, "scan-alpha <system> <geometry> <lo:hi>");
  const auto& sys = ws.object(args[0]);
  const auto git = ws.geometries.find(args[1]);
  if (git == ws.geometries.end()) throw SpecError("unknown geometry '" + args[1] + "'");
  if (git->second.context != sys.context) throw SpecError("geometry and system live in different contexts");
  const auto colon = args[2].find(':');
  const auto lo = colon == std::string::npos ? std::nullopt : Rational::parse(args[2].substr(0, colon));
  const auto hi = colon == std::string::npos ? std::nullopt : Rational::parse(args[2].substr(colon + 1));
  if (!lo || !hi) throw SpecError("range must be lo:hi with rational endpoints, got '" + args[2] + "'");
  const auto& c = std::get<CommaCategory>(ws.context(sys.context));
  const auto r = alpha_scan(c, std::get<CommaObject>(sys.value), git->second.value, *lo, *hi);
  json cands = json::array();
  for (const auto& a : r.candidates) cands.push_back(a.to_string());
  json walls = json::array();
  for (const auto& w : r.walls) {
    walls.push_back({{"alpha", w.alpha.to_string()},
                     {"hn_type_below", classes_json(w.below)},
                     {"hn_type_at", classes_json(w.at)},
                     {"hn_type_above", classes_json(w.above)}});
  }
  Outcome out;
  out.result = {{"range", {r.lo.to_string(), r.hi.to_string()}}, {"candidates", cands}, {"epsilon", r.epsilon.to_string()},
                {"subobjects", r.subobjects}, {"walls", walls}};
  return out;
}

Outcome cmd_counterexample(const Workspace& ws) {
  const auto fv = RepCategory(ws.p, Quiver::point(), "FinVect", ws.budget);
  FunctorCheckOptions opts;
  opts.samples = ws.validation.functor_samples;
  opts.seed = ws.seed;
  opts.extra_ses = {standard_split_ses(fv)};
  const auto fr = check_functor(Functor::one_plus(fv), opts);
  json findings = json::array();
  for (const auto& f : fr.findings) {
    findings.push_back({{"property", f.property}, {"claimed", f.claimed}, {"holds", f.holds}, {"probes", f.probes}, {"detail", f.detail}});
  }
  const CommaCategory c(Functor::one_plus(fv), Functor::zero(fv, fv), StructurePolicy::attempt, "one_plus/zero");
  const auto suite = verify_category(c, ws.validation.samples, ws.seed, ws.validation.max_total_dim);
  const auto product = check_product_equivalence(c, 2);
  Outcome out;
  const bool right_fails = !fr.get("right_exact").holds;
  out.result = {{"functor", {{"name", fr.functor}, {"findings", findings}}},
                {"context", {{"name", c.name()}, {"abelian_capable_by_flags", c.abelian_capable()},
                             {"abelian_suite", report_json(suite)}, {"product_equivalence", report_json(product)}}},
                {"reproduced", right_fails && suite.ok() && product.ok()}};
  if (!right_fails) out.violations.push_back("one_plus passed every right-exactness probe");
  for (const auto& v : suite.violations) out.violations.push_back("abelian suite: " + v.check + ": " + v.detail);
  for (const auto& v : product.violations) out.violations.push_back("product equivalence: " + v.check + ": " + v.detail);
  out.code = out.violations.empty() ? kOk : kValidation;
  return out;
}

Outcome cmd_validate(const Workspace& ws) {
  Outcome out;
  json functors = json::object();
  for (const auto& [name, f] : ws.functors) {
    FunctorCheckOptions opts;
    opts.samples = ws.validation.functor_samples;
    opts.seed = ws.seed;
    const auto r = check_functor(f, opts);
    json findings = json::array();
    for (const auto& x : r.findings) {
      findings.push_back({{"property", x.property}, {"claimed", x.claimed}, {"holds", x.holds}, {"probes", x.probes}, {"detail", x.detail}});
      if (x.violation()) out.violations.push_back("functor " + name + ": claims " + x.property + " but " + x.detail);
    }
    functors[name] = findings;
  }
  json contexts = json::object();
  for (const auto& [name, ctx] : ws.contexts) {
    std::visit(
        [&](const auto& c) {
          if (!c.abelian_capable() && c.policy() == StructurePolicy::require_flags) {
            contexts[name] = {{"abelian_capable", false}, {"suite", "skipped"}};
            return;
          }
          const auto r = verify_category(c, ws.validation.samples, ws.seed, ws.validation.max_total_dim);
          for (const auto& v : r.violations) out.violations.push_back("context " + name + ": " + v.check + ": " + v.detail);
          contexts[name] = {{"abelian_capable", c.abelian_capable()}, {"suite", report_json(r)}};
        },
        ctx);
  }
  out.result = {{"functors", functors}, {"contexts", contexts}};
  out.code = out.violations.empty() ? kOk : kValidation;
  return out;
}

Outcome cmd_selftest(const Workspace& ws) {
  const auto first = acceptance::run(ws.seed);
  const auto second = acceptance::run(ws.seed);
  const bool same = acceptance::fingerprint(first) == acceptance::fingerprint(second);
  Outcome out;
  json criteria = json::array();
  for (const auto& r : first) {
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"checks", r.checks}, {"detail", r.detail},
                        {"violations", r.violations}});
    if (!r.pass) out.violations.push_back("criterion " + std::to_string(r.id) + " (" + r.title + ") failed");
    std::cerr << "commacat: criterion " << r.id << " took " << r.seconds << " s\n";
  }
  criteria.push_back({{"id", 9}, {"title", "determinism (in-process rerun)"}, {"pass", same}, {"checks", first.size()},
                      {"detail", same ? "second run identical" : "second run differs"}, {"violations", json::array()}});
  if (!same) out.violations.push_back("criterion 9 (determinism) failed");
  out.result = {{"criteria", criteria}, {"all_pass", out.violations.empty()}};
  out.code = out.violations.empty() ? kOk : kValidation;
  return out;
}

Outcome dispatch(const Workspace& ws, const std::string& cmd, const std::vector<std::string>& args) {
  if (cmd == "validate") return cmd_validate(ws);
  if (cmd == "kernel" || cmd == "cokernel" || cmd == "image") return cmd_universal(ws, cmd, args);
  if (cmd == "subobjects") return cmd_subobjects(ws, args);
  if (cmd == "kclass") return cmd_kclass(ws, args);
  if (cmd == "hn") return cmd_hn(ws, args);
  if (cmd == "jh") return cmd_jh(ws, args);
  if (cmd == "scan-alpha") return cmd_scan(ws, args);
  if (cmd == "counterexample") return cmd_counterexample(ws);
  if (cmd == "selftest") return cmd_selftest(ws);
  throw SpecError("unknown command '" + cmd + "'");
}

const char* status_name(int code) {
  switch (code) {
    case kOk: return "ok";
    case kValidation: return "validation_failed";
    case kBudget: return "budget_exceeded";
    default: return "spec_error";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commacat: comma categories, HN and JH filtrations, alpha-walls"};
  std::string command;
  std::vector<std::string> args;
  std::string spec_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<std::size_t> max_dim;
  app.add_option("command", command, "validate | kernel | cokernel | image | subobjects | kclass | hn | jh | "
                                     "scan-alpha | counterexample | selftest")
      ->required();
  app.add_option("args", args, "command arguments");
  app.add_option("--spec", spec_path, "workspace file")->required();
  app.add_option("--out", out_path, "report file")->required();
  app.add_option("--seed", seed, "overrides the workspace seed");
  app.add_option("--budget", budget, "max vectors per subspace enumeration");
  app.add_option("--max-dim", max_dim, "max total dimension per object");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kSpec;
  }

  const auto t0 = std::chrono::steady_clock::now();
  json report = {{"schema", "commacat-report/1"}, {"command", command}, {"arguments", args}};
  int code = kOk;
  std::vector<std::string> violations;
  try {
    std::ifstream in(spec_path, std::ios::binary);
    if (!in) throw SpecError("cannot read workspace '" + spec_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    report["input"] = {{"file", std::filesystem::path(spec_path).filename().string()}, {"sha256", sha256_hex(bytes)}};
    json spec;
    try {
      spec = json::parse(bytes);
    } catch (const json::parse_error& e) {
      throw SpecError(std::string("workspace is not valid JSON: ") + e.what());
    }
    const Workspace ws = load_workspace(spec, {seed, budget, max_dim});
    report["seed"] = ws.seed;
    report["budget"] = {{"max_vectors", ws.budget.max_vectors}, {"max_total_dim", ws.budget.max_total_dim}};
    auto outcome = dispatch(ws, command, args);
    report["result"] = std::move(outcome.result);
    violations = std::move(outcome.violations);
    code = outcome.code;
  } catch (const SpecError& e) {
    code = kSpec;
    report["error"] = e.what();
  } catch (const BudgetExceeded& e) {
    code = kBudget;
    report["error"] = e.what();
  } catch (const InvalidStability& e) {
    code = kSpec;
    report["error"] = e.what();
  } catch (const std::exception& e) {
    code = kValidation;
    report["error"] = e.what();
  }
  report["violations"] = violations;
  report["status"] = status_name(code);
  report["exit_code"] = code;

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "commacat: cannot write report '" << out_path << "'\n";
    return kSpec;
  }
  out << report.dump(2) << '\n';
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "commacat: " << command << " -> " << status_name(code) << " in " << secs << " s\n";
  for (const auto& v : violations) std::cerr << "  " << v << '\n';
  if (report.contains("error")) std::cerr << "  error: " << report["error"].get<std::string>() << '\n';
  return code;
}
