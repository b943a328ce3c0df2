#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qhilb/catalan.hpp"
#include "qhilb/components.hpp"
#include "qhilb/error.hpp"
#include "qhilb/hookcode.hpp"
#include "qhilb/identities.hpp"
#include "qhilb/io.hpp"
#include "qhilb/nested.hpp"

namespace qhilb::cli {

namespace {

using io::json;

constexpr int kMaxTOrder = 30;

struct Options {
  bool json_out = false;
  std::string out_path;
  unsigned threads = 1;
  int t_order = 12;
  bool allow_large_order = false;

  int k = 1;
  int a = 1;
  int b = 1;
  int n = 0;
  std::optional<int> max_n;
  std::optional<int> p;
  std::optional<std::string> h_text;
  std::optional<std::string> d_text;
  std::optional<std::string> p_json;
  std::optional<std::string> bh_text;
  std::optional<std::string> bh_json;
  std::optional<std::string> sizes;
  std::optional<std::string> at;
  bool symmetry = false;
  bool exploratory = false;
};

json with_schema(json body) {
  body["schema"] = 1;
  return body;
}

void emit_json(std::ostream& os, const json& j) { os << j.dump() << '\n'; }

HilbertFunction require_h(const Options& o) {
  require(o.h_text.has_value(), "missing --H");
  return io::parse_hilbert(*o.h_text);
}

int check_t_order(const Options& o) {
  require(o.t_order >= 0, "--t-order must be non-negative");
  require(o.t_order <= kMaxTOrder || o.allow_large_order,
          "--t-order above " + std::to_string(kMaxTOrder) + " needs --allow-large-order");
  return o.t_order;
}

void require_k(const Options& o) { require(o.k >= 1, "--k must be a positive integer"); }

std::string describe_diff(const VerificationReport& r) {
  if (!r.first_diff) return "";
  const Exponent e = *r.first_diff;
  const std::string mono = MPoly::monomial(Integer(1), e.main, e.t).to_string(r.main_var, r.t_var);
  const Integer lhs = r.lhs ? r.lhs->coefficient(e) : Integer(0);
  const Integer rhs = r.rhs ? r.rhs->coefficient(e) : Integer(0);
  return "first difference at " + mono + ": lhs " + lhs.str() + ", rhs " + rhs.str();
}

int report(const Options& o, const VerificationReport& r, std::ostream& os) {
  if (o.json_out) {
    emit_json(os, with_schema(io::to_json(r)));
  } else if (r.equal) {
    os << "verified: " << r.identity << " (" << r.instances << (r.instances == 1 ? " instance" : " instances");
    if (r.order > 0) os << ", order " << r.order;
    os << ")\n";
  } else {
    os << "MISMATCH: " << r.identity;
    if (!r.failing_instance.empty()) os << " at " << r.failing_instance;
    os << '\n';
    const std::string diff = describe_diff(r);
    if (!diff.empty()) os << diff << '\n';
  }
  return r.equal ? kExitOk : kExitMismatch;
}

int cmd_class(const Options& o, std::ostream& os, std::ostream& err) {
  require_k(o);
  const HilbertFunction h = require_h(o);
  const MPoly closed = class_closed_form(h, o.k);
  const MPoly oracle = class_bruteforce(h, o.k);
  const bool agree = closed == oracle;
  if (o.json_out) {
    emit_json(os, with_schema({{"H", h.values()}, {"k", o.k}, {"class", io::to_json(closed)}, {"oracle_equal", agree}}));
  } else {
    os << closed.to_string() << '\n';
  }
  if (!agree) err << "closed form disagrees with enumeration: " << oracle.to_string() << '\n';
  return agree ? kExitOk : kExitMismatch;
}

int cmd_class_ab(const Options& o, std::ostream& os) {
  require(o.a >= 1 && o.b >= 1, "--a and --b must be positive");
  const HilbertFunction h = require_h(o);
  const MPoly c = class_bruteforce_ab(h, o.a, o.b);
  if (o.json_out) {
    emit_json(os, with_schema({{"H", h.values()}, {"a", o.a}, {"b", o.b}, {"class", io::to_json(c)}}));
  } else {
    os << c.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_components(const Options& o, std::ostream& os) {
  require_k(o);
  require(o.n >= 0, "--n must be non-negative");
  json list = json::array();
  for (const auto& h : components_for(o.n, o.k)) {
    const MPoly c = class_closed_form(h, o.k);
    if (o.json_out) {
      list.push_back({{"H", h.values()}, {"class", io::to_json(c)}, {"dplus", dplus_formula(h, o.k)}});
    } else {
      os << h.to_string() << ": " << c.to_string() << '\n';
    }
  }
  if (o.json_out) emit_json(os, with_schema({{"n", o.n}, {"k", o.k}, {"components", list}}));
  return kExitOk;
}

int cmd_dplus(const Options& o, std::ostream& os, std::ostream& err) {
  require_k(o);
  if (o.d_text) {
    require(!o.h_text, "give either --H or --D, not both");
    const YoungDiagram d = io::parse_partition(*o.d_text);
    const int value = dplus_statistic(d, o.k);
    if (o.json_out) {
      emit_json(os, with_schema({{"partition", d.rows()}, {"k", o.k}, {"dplus", value}}));
    } else {
      os << value << '\n';
    }
    return kExitOk;
  }
  const HilbertFunction h = require_h(o);
  const int formula = dplus_formula(h, o.k);
  bool constant = true;
  for (const auto& d : enumerate_with_diag(h, 1, o.k)) {
    if (dplus_statistic(d, o.k) != formula) {
      constant = false;
      err << "fiber element " << d.to_string() << " has d+ = " << dplus_statistic(d, o.k) << '\n';
    }
  }
  if (o.json_out) {
    emit_json(os, with_schema({{"H", h.values()}, {"k", o.k}, {"dplus", formula}, {"fiber_constant", constant}}));
  } else {
    os << formula << '\n';
  }
  return constant ? kExitOk : kExitMismatch;
}

int cmd_encode(const Options& o, std::ostream& os) {
  require_k(o);
  require(o.d_text.has_value(), "missing --D");
  const DiagramSequence p = encode(io::parse_partition(*o.d_text), o.k);
  emit_json(os, with_schema(io::to_json(p)));
  return kExitOk;
}

int cmd_decode(const Options& o, std::istream& in, std::ostream& os) {
  std::string text;
  if (o.p_json) {
    text = *o.p_json;
  } else {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  const json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), "decode: input is not valid JSON");
  const YoungDiagram d = decode(io::sequence_from_json(j));
  if (o.json_out) {
    emit_json(os, with_schema({{"partition", d.rows()}}));
  } else {
    os << d.to_string() << '\n';
  }
  return kExitOk;
}

std::pair<Integer, Integer> parse_at(const std::string& text) {
  Integer q = 0;
  Integer t = 0;
  bool seen_q = false;
  bool seen_t = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    require(eq != std::string::npos, "--at expects q=<int>,t=<int>");
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    require(!value.empty() && value.find_first_not_of("-0123456789") == std::string::npos,
            "--at: '" + value + "' is not an integer");
    if (name == "q") {
      q = Integer(value);
      seen_q = true;
    } else if (name == "t") {
      t = Integer(value);
      seen_t = true;
    } else {
      throw PreconditionError("--at: unknown variable '" + name + "'");
    }
  }
  require(seen_q && seen_t, "--at expects q=<int>,t=<int>");
  return {q, t};
}

MPoly swap_variables(const MPoly& p) {
  MPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(Exponent{e.t, e.main}, c);
  return out;
}

int cmd_catalan(const Options& o, std::ostream& os) {
  require_k(o);
  require(o.n >= 0, "--n must be non-negative");
  const MPoly c = qt_catalan(o.n, o.k);
  std::optional<Integer> value;
  if (o.at) {
    const auto [q, t] = parse_at(*o.at);
    value = c.evaluate(q, t);
  }
  const bool symmetric = swap_variables(c) == c;
  if (o.json_out) {
    json body = {{"n", o.n}, {"k", o.k}, {"poly", io::to_json(c, "q", "t")}};
    if (value) body["value"] = value->str();
    if (o.symmetry) body["symmetric"] = symmetric;
    emit_json(os, with_schema(body));
  } else {
    os << (value ? value->str() : c.to_string("q", "t")) << '\n';
    if (o.symmetry) os << (symmetric ? "symmetric in q,t" : "not symmetric in q,t") << '\n';
  }
  return kExitOk;
}

VerificationReport theorem2_report(int k, int n) {
  const Theorem2Report t = verify_theorem2(k, n);
  VerificationReport r;
  r.identity = "thm2 k=" + std::to_string(k) + " n=" + std::to_string(n);
  r.order = k * n * (n - 1) / 2;
  r.equal = t.equal;
  r.lhs = t.lhs;
  r.rhs = t.rhs;
  r.first_diff = first_difference(t.lhs, t.rhs);
  return r;
}

int sweep_or_single(const Options& o, std::ostream& os, VerificationReport (*single)(const HilbertFunction&, int),
                    VerificationReport (*sweep)(int, int, unsigned)) {
  require_k(o);
  require(o.h_text.has_value() != o.max_n.has_value(), "give exactly one of --H or --max-n");
  if (o.h_text) return report(o, single(require_h(o), o.k), os);
  require(*o.max_n >= 0, "--max-n must be non-negative");
  return report(o, sweep(o.k, *o.max_n, o.threads), os);
}

int cmd_extra_id(const Options& o, std::ostream& os) {
  require_k(o);
  require(o.h_text.has_value() != o.max_n.has_value(), "give exactly one of --H or --max-n");
  if (o.max_n) {
    require(!o.p, "--p needs --H");
    require(*o.max_n >= 0, "--max-n must be non-negative");
    return report(o, verify_extra_identity_sweep(o.k, *o.max_n, o.threads), os);
  }
  const HilbertFunction h = require_h(o);
  if (o.p) return report(o, verify_extra_identity(h, o.k, *o.p), os);
  const AuxIndices aux = aux_indices(h, o.k);
  VerificationReport combined;
  combined.identity = "extra-id H=" + h.to_string() + " all p";
  combined.equal = true;
  combined.instances = 0;
  for (int p = aux.psi; p < aux.psi + o.k; ++p) {
    VerificationReport r = verify_extra_identity(h, o.k, p);
    ++combined.instances;
    if (!r.equal && combined.equal) {
      combined.equal = false;
      combined.lhs = r.lhs;
      combined.rhs = r.rhs;
      combined.first_diff = r.first_diff;
      combined.failing_instance = "p=" + std::to_string(p);
    }
  }
  return report(o, combined, os);
}

int cmd_nested(const Options& o, std::ostream& os) {
  const int given = int(o.bh_text.has_value()) + int(o.bh_json.has_value()) + int(o.sizes.has_value());
  require(given == 1, "give exactly one of --bH, --bH-json or --sizes");
  std::vector<NestedHilbertFunctions> cases;
  if (o.bh_text) {
    cases.push_back(io::parse_nested(*o.bh_text));
  } else if (o.bh_json) {
    const json j = json::parse(*o.bh_json, nullptr, false);
    require(!j.is_discarded(), "--bH-json is not valid JSON");
    cases.push_back(io::nested_from_json(j));
  } else {
    for (const auto& bh : realized_nested_profiles(io::parse_int_list(*o.sizes))) cases.push_back(bh);
  }

  bool all_equal = true;
  bool all_hypothesis = true;
  json results = json::array();
  for (const auto& bh : cases) {
    const NestedReport r = verify_nested_consistency(bh, o.exploratory || o.sizes.has_value());
    all_hypothesis = all_hypothesis && r.hypothesis;
    const bool ok = r.equal && (r.hypothesis || o.exploratory);
    all_equal = all_equal && ok;
    if (o.json_out) {
      results.push_back({{"bH", io::to_json(bh)},
                         {"hypothesis", r.hypothesis},
                         {"equal", r.equal},
                         {"nested_count", r.nested_count},
                         {"interleaved_count", r.interleaved_count},
                         {"interleaved", r.interleaved.values()}});
    } else if (!ok || cases.size() == 1) {
      std::string parts;
      for (const auto& h : bh.parts()) parts += (parts.empty() ? "" : ";") + h.to_string();
      os << (ok ? "verified: " : "MISMATCH: ") << "nested bH=" << parts << " hypothesis="
         << (r.hypothesis ? "yes" : "no") << " chains=" << r.nested_count << " interleaved=" << r.interleaved_count
         << '\n';
    }
  }
  if (o.json_out) {
    emit_json(os, with_schema({{"identity", "nested"},
                               {"equal", all_equal},
                               {"hypothesis", all_hypothesis},
                               {"instances", cases.size()},
                               {"results", results}}));
  } else if (cases.size() > 1 && all_equal) {
    os << "verified: nested (" << cases.size() << " instances)\n";
  }
  return all_equal ? kExitOk : kExitMismatch;
}

void add_global(CLI::App* app, Options& o) {
  app->add_flag("--json", o.json_out, "Emit JSON");
  app->add_option("--out", o.out_path, "Write results to FILE instead of stdout");
  app->add_option("--threads", o.threads, "Worker threads for sweeps")->check(CLI::Range(1u, 256u));
}

void add_t_order(CLI::App* app, Options& o) {
  app->add_option("--t-order", o.t_order, "Truncation order in t (series mod t^(N+1))");
  app->add_flag("--allow-large-order", o.allow_large_order, "Lift the t-order cost guard");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Motivic classes of quasi-homogeneous Hilbert scheme components"};
  app.require_subcommand(1);
  app.fallthrough();
  add_global(&app, o);

  auto* cls = app.add_subcommand("class", "Class of the component with Hilbert function H (closed form + oracle)");
  cls->add_option("--k", o.k)->required();
  cls->add_option("--H", o.h_text)->required();

  auto* cls_ab = app.add_subcommand("class-ab", "Class for coprime weights (a,b) by enumeration");
  cls_ab->add_option("--a", o.a)->required();
  cls_ab->add_option("--b", o.b)->required();
  cls_ab->add_option("--H", o.h_text)->required();

  auto* comps = app.add_subcommand("components", "Irreducible components for n points");
  comps->add_option("--n", o.n)->required();
  comps->add_option("--k", o.k)->required();

  auto* dplus = app.add_subcommand("dplus", "Fiber dimension d+ of a component (--H) or a diagram (--D)");
  dplus->add_option("--k", o.k)->required();
  dplus->add_option("--H", o.h_text);
  dplus->add_option("--D", o.d_text);

  auto* hook = app.add_subcommand("hookcode", "Hook-code bijection");
  hook->require_subcommand(1);
  hook->fallthrough();
  auto* enc = hook->add_subcommand("encode", "Partition to diagram sequence (JSON)");
  enc->add_option("--D", o.d_text)->required();
  enc->add_option("--k", o.k)->required();
  auto* dec = hook->add_subcommand("decode", "Diagram sequence (JSON, --P or stdin) to partition");
  dec->add_option("--P", o.p_json);

  auto* cat = app.add_subcommand("catalan", "k-parameter q,t-Catalan polynomial");
  cat->add_option("--n", o.n)->required();
  cat->add_option("--k", o.k)->required();
  cat->add_option("--at", o.at, "Evaluate, e.g. q=1,t=1");
  cat->add_flag("--symmetry", o.symmetry, "Report whether the polynomial is symmetric in q and t");

  auto* verify = app.add_subcommand("verify", "Verify an identity; exit 1 on mismatch");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* thm1 = verify->add_subcommand("thm1", "Closed form against enumeration");
  thm1->add_option("--k", o.k)->required();
  thm1->add_option("--H", o.h_text);
  thm1->add_option("--max-n", o.max_n);
  auto* thm2 = verify->add_subcommand("thm2", "Open stratum against the q,t-Catalan polynomial");
  thm2->add_option("--k", o.k)->required();
  thm2->add_option("--n", o.n)->required();
  auto* thm3 = verify->add_subcommand("thm3", "Generating series over good sequences");
  thm3->add_option("--k", o.k)->required();
  add_t_order(thm3, o);
  auto* main_id = verify->add_subcommand("main-id", "Main identity");
  main_id->add_option("--k", o.k)->required();
  main_id->add_option("--H", o.h_text);
  main_id->add_option("--max-n", o.max_n);
  auto* extra_id = verify->add_subcommand("extra-id", "Extra identity for admissible p");
  extra_id->add_option("--k", o.k)->required();
  extra_id->add_option("--H", o.h_text);
  extra_id->add_option("--p", o.p);
  extra_id->add_option("--max-n", o.max_n);
  auto* hseries = verify->add_subcommand("hilbert-series", "d+ generating series against the infinite product");
  hseries->add_option("--k", o.k)->required();
  add_t_order(hseries, o);
  auto* conj = verify->add_subcommand("conjecture", "Generating-series conjecture for weights (a,b)");
  conj->add_option("--a", o.a)->required();
  conj->add_option("--b", o.b)->required();
  add_t_order(conj, o);
  auto* nested = verify->add_subcommand("nested", "Nested fixed points against the interleaved fiber");
  nested->add_option("--bH", o.bh_text, "Parts separated by ';', e.g. 2,1;1");
  nested->add_option("--bH-json", o.bh_json);
  nested->add_option("--sizes", o.sizes, "All realizable bH for chains of these sizes, e.g. 4,3");
  nested->add_flag("--exploratory", o.exploratory, "Run even when the hypothesis fails");

  for (CLI::App* sub : {cls, cls_ab, comps, dplus, enc, dec, cat, thm1, thm2, thm3, main_id, extra_id, hseries, conj,
                        nested}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream result;
  int code = kExitOk;
  try {
    if (*cls) {
      code = cmd_class(o, result, err);
    } else if (*cls_ab) {
      code = cmd_class_ab(o, result);
    } else if (*comps) {
      code = cmd_components(o, result);
    } else if (*dplus) {
      code = cmd_dplus(o, result, err);
    } else if (*enc) {
      code = cmd_encode(o, result);
    } else if (*dec) {
      code = cmd_decode(o, in, result);
    } else if (*cat) {
      code = cmd_catalan(o, result);
    } else if (*thm1) {
      code = sweep_or_single(o, result, verify_theorem1, verify_theorem1_sweep);
    } else if (*thm2) {
      require_k(o);
      require(o.n >= 0, "--n must be non-negative");
      code = report(o, theorem2_report(o.k, o.n), result);
    } else if (*thm3) {
      require_k(o);
      code = report(o, verify_theorem3(o.k, check_t_order(o), o.threads), result);
    } else if (*main_id) {
      code = sweep_or_single(o, result, verify_main_identity, verify_main_identity_sweep);
    } else if (*extra_id) {
      code = cmd_extra_id(o, result);
    } else if (*hseries) {
      require_k(o);
      code = report(o, verify_hilbert_series(o.k, check_t_order(o), o.threads), result);
    } else if (*conj) {
      require(o.a >= 1 && o.b >= 1, "--a and --b must be positive");
      code = report(o, verify_conjecture(o.a, o.b, check_t_order(o), o.threads), result);
    } else if (*nested) {
      code = cmd_nested(o, result);
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }

  if (o.out_path.empty()) {
    out << result.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_path << '\n';
      return kExitUsage;
    }
    file << result.str();
  }
  return code;
}

}  // namespace qhilb::cli
