#include "bihomega/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

#include "bihomega/checkers.hpp"
#include "bihomega/constructions.hpp"
#include "bihomega/dsl.hpp"
#include "bihomega/forge.hpp"

namespace bihomega {

namespace {

using nlohmann::json;

// Thrown for anything that should end the run with exit code 2.
struct UsageFailure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw UsageFailure{"cannot write '" + path + "'"};
  o << text;
  if (!o) throw UsageFailure{"cannot write '" + path + "'"};
}

Workspace load_workspace(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_workspace(text);
  } catch (const ParseError& e) {
    throw UsageFailure{path + ": parse error at " + e.what()};
  } catch (const ResolutionError& e) {
    throw UsageFailure{path + ": " + e.what()};
  }
}

// "file" or "file:name"; the name picks one algebra of the workspace.
struct AlgebraRef {
  Workspace ws;
  std::string name;
};

AlgebraRef load_algebra(const std::string& ref_text) {
  std::string path = ref_text;
  std::string name;
  const auto colon = ref_text.rfind(':');
  if (colon != std::string::npos && colon + 1 < ref_text.size() && ref_text.find('/', colon) == std::string::npos) {
    path = ref_text.substr(0, colon);
    name = ref_text.substr(colon + 1);
  }
  AlgebraRef ref{load_workspace(path), name};
  if (name.empty()) {
    if (ref.ws.algebras.size() != 1) {
      throw UsageFailure{"'" + path + "' holds " + std::to_string(ref.ws.algebras.size()) +
                         " algebras; name one as FILE:NAME"};
    }
    ref.name = ref.ws.algebras.begin()->first;
  } else if (!ref.ws.algebras.count(name)) {
    throw UsageFailure{"no algebra named '" + name + "' in '" + path + "'"};
  }
  return ref;
}

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageFailure{"invalid " + what + " '" + text + "'"};
  }
}

std::string join_labels(const SemigroupTable& s, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + s.label(idx[i]);
  return out;
}

std::string join_basis(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? ",e" : "e") + std::to_string(idx[i] + 1);
  return out;
}

void print_verdict(std::ostream& out, const std::string& title, const Verdict& v, const SemigroupTable& s) {
  out << title << '\n';
  for (const auto& r : v.reports) {
    if (r.passed()) {
      out << "  PASS " << r.axiom << " (" << r.cells << " cells)\n";
      continue;
    }
    out << "  FAIL " << r.axiom << ": " << r.violations << " of " << r.cells << " cells violate\n";
    for (const auto& w : r.witnesses) {
      out << "    at (" << join_labels(s, w.omega) << ")";
      if (!w.basis.empty()) out << " (" << join_basis(w.basis) << ")";
      out << ": " << format_vector(w.lhs) << " != " << format_vector(w.rhs) << '\n';
    }
  }
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json verdict_json(const std::string& subject, const std::string& name, const Verdict& v, const SemigroupTable& s) {
  json records = json::array();
  for (const auto& r : v.reports) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
      json omega = json::array();
      for (auto i : w.omega) omega.push_back(s.label(i));
      json basis = json::array();
      for (auto i : w.basis) basis.push_back("e" + std::to_string(i + 1));
      witnesses.push_back({{"omega", omega}, {"basis", basis}, {"lhs", vector_json(w.lhs)}, {"rhs", vector_json(w.rhs)}});
    }
    records.push_back({{"subject", subject},
                       {"name", name},
                       {"axiom", r.axiom},
                       {"passed", r.passed()},
                       {"cells", r.cells},
                       {"violations", r.violations},
                       {"witnesses", witnesses}});
  }
  return records;
}

struct CheckArgs {
  std::string workspace;
  std::optional<std::string> axiom;
  std::size_t max_witnesses = 10;
  std::optional<std::string> json_out;
};

int run_check(const CheckArgs& args, std::ostream& stdout_stream, std::ostream& err) {
  const Workspace ws = load_workspace(args.workspace);
  // With --json -, standard output carries only the JSON document.
  std::ostream discard(nullptr);
  const bool json_to_stdout = args.json_out && *args.json_out == "-";
  std::ostream& out = json_to_stdout ? discard : stdout_stream;
  const CheckOptions opts{args.max_witnesses};
  json results = json::array();
  std::size_t axioms = 0;
  std::size_t failed = 0;
  bool errors = false;

  auto handle = [&](const std::string& subject, const std::string& name, const std::string& title,
                    const SemigroupTable& s, auto&& compute) {
    Verdict v;
    try {
      v = compute();
    } catch (const Error& e) {
      err << "error: " << subject << " " << name << ": " << e.what() << '\n';
      errors = true;
      return;
    }
    if (args.axiom) {
      v = filter_axiom(v, *args.axiom);
      if (v.reports.empty()) return;
    }
    print_verdict(out, title, v, s);
    for (const auto& r : v.reports) {
      ++axioms;
      if (!r.passed()) ++failed;
    }
    for (auto& rec : verdict_json(subject, name, v, s)) results.push_back(std::move(rec));
  };

  for (const auto& [name, s] : ws.semigroups) {
    handle("semigroup", name, "semigroup " + name, *s, [&] { return validate_semigroup(*s, opts); });
  }
  for (const auto& [name, a] : ws.algebras) {
    handle("algebra", name, "algebra " + name + " : " + std::string(kind_keyword(a.kind())), *a.omega(),
           [&] { return check_kind(a, opts); });
  }
  for (const auto& [name, f] : ws.families) {
    const auto& a = ws.algebras.at(f.algebra);
    handle("family", name, "family " + name + " on " + f.algebra, *a.omega(),
           [&] { return check_morphism(f.maps, a, a, opts); });
  }
  for (const auto& [name, r] : ws.rbs) {
    const auto& a = ws.algebras.at(r.algebra);
    handle("rb", name, "rb " + name + " on " + r.algebra + " weight " + r.family.weight.str(), *a.omega(),
           [&] { return check_rota_baxter(a, r.family, opts); });
  }

  if (args.axiom && axioms == 0 && !errors) throw UsageFailure{"no axiom named '" + *args.axiom + "' was checked"};
  out << "checked " << axioms << " axioms: " << axioms - failed << " passed, " << failed << " failed\n";
  if (args.json_out) {
    const json doc{{"format", "bihomega-check-report"}, {"version", 1}, {"results", results}};
    const std::string text = doc.dump(2) + "\n";
    if (json_to_stdout) {
      stdout_stream << text;
    } else {
      write_file(*args.json_out, text);
    }
  }
  if (errors) return 2;
  return failed ? 1 : 0;
}

struct ConstructArgs {
  std::string name;
  std::string input;
  std::optional<std::string> rb;
  std::optional<std::string> p2;
  std::optional<std::string> q2;
  std::optional<std::string> as;
  std::string out_path;
  bool unchecked = false;
  std::size_t max_witnesses = 10;
};

int run_construct(const ConstructArgs& args, std::ostream& out) {
  const auto kind = construction_inputs(args.name);
  if (!kind) {
    std::string names;
    for (auto n : construction_names()) names += (names.empty() ? "" : ", ") + std::string(n);
    throw UsageFailure{"unknown construction '" + args.name + "' (known: " + names + ")"};
  }
  const AlgebraRef ref = load_algebra(args.input);
  const AlgebraInstance& a = ref.ws.algebras.at(ref.name);
  ConstructionArgs cargs;
  std::vector<std::string> used;
  if (*kind == ConstructionInput::RotaBaxter) {
    if (!args.rb) throw UsageFailure{"construction '" + args.name + "' needs --rb"};
    auto it = ref.ws.rbs.find(*args.rb);
    if (it == ref.ws.rbs.end()) throw UsageFailure{"no rb named '" + *args.rb + "'"};
    if (it->second.algebra != ref.name) {
      throw UsageFailure{"rb '" + *args.rb + "' is declared on '" + it->second.algebra + "', not '" + ref.name + "'"};
    }
    cargs.rb = it->second.family;
    used.push_back("rb: " + *args.rb);
  } else if (args.rb) {
    throw UsageFailure{"construction '" + args.name + "' takes no --rb"};
  }
  if (*kind == ConstructionInput::Twist) {
    auto family = [&](const std::optional<std::string>& n, const char* flag) {
      if (!n) return LinearFamily::identity(a.omega(), a.dim());
      auto it = ref.ws.families.find(*n);
      if (it == ref.ws.families.end()) throw UsageFailure{"no family named '" + *n + "'"};
      if (it->second.algebra != ref.name) {
        throw UsageFailure{"family '" + *n + "' is declared on '" + it->second.algebra + "', not '" + ref.name + "'"};
      }
      used.push_back(std::string(flag) + ": " + *n);
      return it->second.maps;
    };
    cargs.p2 = family(args.p2, "p2");
    cargs.q2 = family(args.q2, "q2");
  } else if (args.p2 || args.q2) {
    throw UsageFailure{"construction '" + args.name + "' takes no --p2/--q2"};
  }

  ConstructOptions opts;
  opts.post_check = !args.unchecked;
  opts.check.max_witnesses = args.max_witnesses;
  Constructed c = [&] {
    try {
      return run_construction(args.name, a, cargs, opts);
    } catch (const CheckFailed&) {
      throw;
    } catch (const Error& e) {
      const std::string what = e.what();
      throw UsageFailure{what.rfind(args.name, 0) == 0 ? what : args.name + ": " + what};
    }
  }();

  const std::string result_name = args.as ? *args.as : ref.name + "_" + args.name;
  Workspace result;
  result.add_algebra(result_name, c.instance);
  std::ostringstream text;
  text << "# construction: " << c.provenance.construction << '\n';
  text << "# input: " << ref.name << '\n';
  for (const auto& u : used) text << "# " << u << '\n';
  if (c.provenance.weight) text << "# weight: " << c.provenance.weight->str() << '\n';
  text << "# input digests:";
  for (const auto& d : c.provenance.input_digests) text << ' ' << d;
  text << '\n';
  text << "# output digest: " << digest(c.instance) << '\n';
  text << "# checked: " << (args.unchecked ? "no" : "yes") << '\n';
  text << serialize_workspace(result);
  write_file(args.out_path, text.str());
  out << "constructed " << result_name << " : " << kind_keyword(c.instance.kind()) << " over "
      << c.instance.omega()->name() << " dim " << c.instance.dim() << '\n';
  return 0;
}

struct SearchArgs {
  std::string algebra;
  std::string entries = "-1,0,1";
  std::string weight = "0";
  std::uint64_t budget = 10'000'000;
  std::string out_path;
};

int run_search(const SearchArgs& args, std::ostream& out) {
  const AlgebraRef ref = load_algebra(args.algebra);
  const AlgebraInstance& a = ref.ws.algebras.at(ref.name);
  SearchConfig cfg;
  cfg.entries.clear();
  std::stringstream ss(args.entries);
  for (std::string item; std::getline(ss, item, ',');) cfg.entries.push_back(parse_rational(item, "entry"));
  if (cfg.entries.empty()) throw UsageFailure{"--entries is empty"};
  cfg.weight = parse_rational(args.weight, "weight");
  cfg.budget = args.budget;
  std::vector<RotaBaxterFamily> found;
  try {
    found = brute_force_rb_search(a, cfg);
  } catch (const CheckFailed&) {
    throw;
  } catch (const Error& e) {
    throw UsageFailure{std::string("search-rb: ") + e.what()};
  }
  Workspace result;
  result.add_algebra(ref.name, a);
  const std::size_t width = std::to_string(found.size()).size();
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::ostringstream name;
    name << ref.name << "_rb" << std::setw(static_cast<int>(width)) << std::setfill('0') << i + 1;
    result.rbs.emplace(name.str(), Workspace::RotaBaxter{ref.name, found[i]});
  }
  write_file(args.out_path, serialize_workspace(result));
  std::size_t nonzero = 0;
  for (const auto& r : found) nonzero += LinearFamily::zero(a.omega(), a.dim()) == r.maps ? 0 : 1;
  out << "found " << found.size() << " Rota-Baxter families of weight " << cfg.weight.str() << " on " << ref.name
      << " (" << nonzero << " nonzero)\n";
  return 0;
}

Rational json_rational(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>(), what);
  throw UsageFailure{what + " must be an integer or a string like \"1/2\""};
}

TwoDimExampleParams load_params(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageFailure{path + ": " + e.what()};
  }
  try {
    const auto elements = j.at("elements").get<std::vector<std::string>>();
    const auto rows = j.at("table").get<std::vector<std::vector<std::string>>>();
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : rows) {
      auto& out = table.emplace_back();
      for (const auto& label : row) {
        std::size_t k = 0;
        while (k < elements.size() && elements[k] != label) ++k;
        if (k == elements.size()) throw UsageFailure{path + ": '" + label + "' is not in elements"};
        out.push_back(k);
      }
    }
    SemigroupPtr omega;
    try {
      omega = std::make_shared<const SemigroupTable>(j.value("name", "W"), elements, table,
                                                     j.value("commutative", false));
    } catch (const Error& e) {
      throw UsageFailure{path + ": " + e.what()};
    }
    const Verdict v = validate_semigroup(*omega);
    if (!v.passed()) throw UsageFailure{path + ": table is not a valid semigroup\n" + describe_failures(v)};
    TwoDimExampleParams p{omega, {}, {}, {}};
    for (const auto& row : j.at("c")) {
      auto& out = p.c.emplace_back();
      for (const auto& x : row) out.push_back(json_rational(x, "c entry"));
    }
    for (const auto& x : j.at("rthree")) p.rthree.push_back(json_rational(x, "rthree entry"));
    for (const auto& x : j.at("lthree")) p.lthree.push_back(json_rational(x, "lthree entry"));
    return p;
  } catch (const json::exception& e) {
    throw UsageFailure{path + ": " + e.what()};
  }
}

struct ExampleArgs {
  std::string params;
  std::optional<std::string> out_path;
  std::size_t max_witnesses = 10;
};

int run_example(const ExampleArgs& args, std::ostream& out) {
  const TwoDimExampleParams params = load_params(args.params);
  std::vector<ReadingOutcome> outcomes;
  try {
    outcomes = two_dim_ambiguity_report(params, CheckOptions{args.max_witnesses});
  } catch (const ConditionViolated& e) {
    std::string where;
    for (auto i : e.failure().indices) where += (where.empty() ? "" : ",") + params.omega->label(i);
    throw UsageFailure{"side condition " + e.failure().condition + " fails at (" + where + ")"};
  } catch (const Error& e) {
    throw UsageFailure{e.what()};
  }
  out << format_ambiguity_report(outcomes);
  bool ok = true;
  Workspace ws;
  for (const auto& o : outcomes) {
    if (!o.verdict.passed()) {
      ok = false;
      print_verdict(out, std::string(reading_name(o.reading)) + " reading", o.verdict, *params.omega);
    }
    ws.add_algebra("two_dim_" + std::string(reading_name(o.reading)), o.instance);
  }
  if (args.out_path) write_file(*args.out_path, serialize_workspace(ws));
  return ok ? 0 : 1;
}

struct FmtArgs {
  std::string workspace;
  std::optional<std::string> out_path;
  bool check = false;
};

int run_fmt(const FmtArgs& args, std::ostream& out, std::ostream& err) {
  const std::string original = read_file(args.workspace);
  const std::string canonical = serialize_workspace(load_workspace(args.workspace));
  if (args.check) {
    if (original == canonical) return 0;
    err << args.workspace << " is not in canonical form\n";
    return 1;
  }
  if (args.out_path) {
    write_file(*args.out_path, canonical);
  } else {
    out << canonical;
  }
  return 0;
}

}  // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for BiHom-Omega-algebras", "bihomega"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "check every object of a workspace against its axioms");
  c->add_option("workspace", check.workspace, "workspace file (.bho)")->required();
  c->add_option("--axiom", check.axiom, "only report this axiom");
  c->add_option("--max-witnesses", check.max_witnesses, "witnesses kept per axiom")->capture_default_str();
  c->add_option("--json", check.json_out, "also write the structured report here ('-': standard output, replacing the text report)");

  ConstructArgs construct;
  auto* k = app.add_subcommand("construct", "run a construction on an algebra");
  k->add_option("name", construct.name, "construction name")->required();
  k->add_option("--input", construct.input, "algebra as FILE or FILE:NAME")->required();
  k->add_option("--rb", construct.rb, "Rota-Baxter family declared in the input workspace");
  k->add_option("--p2", construct.p2, "first twisting family (default identity)");
  k->add_option("--q2", construct.q2, "second twisting family (default identity)");
  k->add_option("--as", construct.as, "name of the result (default INPUT_CONSTRUCTION)");
  k->add_option("--out", construct.out_path, "output workspace file")->required();
  k->add_flag("--unchecked", construct.unchecked, "skip the post-check of the output");
  k->add_option("--max-witnesses", construct.max_witnesses, "witnesses kept per axiom")->capture_default_str();

  SearchArgs search;
  auto* s = app.add_subcommand("search-rb", "enumerate small-entry Rota-Baxter families");
  s->add_option("--algebra", search.algebra, "algebra as FILE or FILE:NAME")->required();
  s->add_option("--entries", search.entries, "comma-separated entry values")->capture_default_str();
  s->add_option("--weight", search.weight, "weight")->capture_default_str();
  s->add_option("--budget", search.budget, "largest number of raw candidates")->capture_default_str();
  s->add_option("--out", search.out_path, "output workspace file")->required();

  ExampleArgs example;
  auto* e = app.add_subcommand("example", "build a named example");
  e->require_subcommand(1);
  auto* two = e->add_subcommand("two-dim", "the two-dimensional example in both readings");
  two->add_option("--params", example.params, "JSON parameter file")->required();
  two->add_option("--out", example.out_path, "write both instances to this workspace file");
  two->add_option("--max-witnesses", example.max_witnesses, "witnesses kept per axiom")->capture_default_str();

  FmtArgs fmt;
  auto* f = app.add_subcommand("fmt", "rewrite a workspace in canonical form");
  f->add_option("workspace", fmt.workspace, "workspace file (.bho)")->required();
  f->add_option("--out", fmt.out_path, "output file (default standard output)");
  f->add_flag("--check", fmt.check, "exit 1 unless the file is already canonical");

  if (!args.empty() && !args[0].starts_with('-') && !app.get_subcommand_no_throw(args[0])) {
    err << "error: unknown subcommand '" << args[0] << "'\n\n" << app.help();
    return 2;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().back()->help());
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (c->parsed()) return run_check(check, out, err);
    if (k->parsed()) return run_construct(construct, out);
    if (s->parsed()) return run_search(search, out);
    if (two->parsed()) return run_example(example, out);
    return run_fmt(fmt, out, err);
  } catch (const UsageFailure& u) {
    err << "error: " << u.message << '\n';
    return 2;
  } catch (const CheckFailed& cf) {
    out << cf.what();
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
}

}  // namespace bihomega
