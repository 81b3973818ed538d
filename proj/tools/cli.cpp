#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lasg/lasg.hpp"

namespace lasg::cli {

namespace {

struct Options {
  std::string file = "-";
  std::string subset;
  std::string kind;
  std::size_t order = 0;
  bool up_to_iso = false;
  std::vector<std::string> filters;
  std::string theorem;
  bool all = false;
  std::string mode;
  bool json = false;
  std::string r = "0";
  std::string points;
  std::string variant = "additive";
  std::uint64_t seed = 0;
};

// Thrown for bad input data (as opposed to bad command-line usage).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Magma> load_models(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return parse_model_stream(text);
  } catch (const ParseError& e) {
    throw InputError((path == "-" ? std::string("<stdin>") : path) + ":" +
                     std::to_string(e.line()) + ": " + e.message());
  }
}

Magma load_single(const std::string& path, std::istream& in) {
  auto models = load_models(path, in);
  if (models.size() != 1) {
    throw InputError("expected exactly one model, got " +
                     std::to_string(models.size()));
  }
  return std::move(models.front());
}

ElemSet parse_subset(const Magma& m, const std::string& text) {
  ElemSet a = m.empty_set();
  for (const auto& label : split_commas(text)) {
    auto e = m.find_label(label);
    if (!e) throw InputError("unknown label '" + label + "' in --subset");
    a.insert(*e);
  }
  if (a.empty()) throw InputError("--subset must name at least one element");
  return a;
}

IdealKind require_kind(const std::string& name) {
  auto k = parse_kind(name);
  if (!k) throw UsageError("unknown --kind '" + name + "'");
  return *k;
}

std::string fmt_set(const Magma& m, const ElemSet& a) {
  std::string out = "{";
  bool first = true;
  for (ElemId e : a) {
    if (!first) out += ',';
    out += m.label(e);
    first = false;
  }
  return out + "}";
}

std::string fmt_tuple(const Magma& m, const std::vector<ElemId>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ", ";
    out += m.label(t[i]);
  }
  return out + ")";
}

// Emits one document per model, or an array when there are several.
void emit_json(std::ostream& out, std::vector<Json> docs) {
  if (docs.size() == 1) {
    out << docs.front().dump(2) << '\n';
  } else {
    out << Json(std::move(docs)).dump(2) << '\n';
  }
}

// check --------------------------------------------------------------------

ExitStatus cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  auto models = load_models(o.file, in);
  bool all_la = true;
  std::vector<Json> docs;
  for (std::size_t idx = 0; idx < models.size(); ++idx) {
    const Magma& m = models[idx];
    const bool la = is_la_semigroup(m);
    all_la = all_la && la;
    auto left = find_left_identity(m);
    auto right = find_right_identity(m);
    auto intra = is_intra_regular(m);

    if (o.json) {
      Json j;
      j["magma"] = magma_to_json(m);
      j["la_semigroup"] = la;
      Json laws = Json::array();
      for (Law law : all_laws) laws.push_back(to_json(m, check_law(m, law)));
      j["laws"] = std::move(laws);
      j["left_identity"] = left ? Json(m.label(*left)) : Json(nullptr);
      j["right_identity"] = right ? Json(m.label(*right)) : Json(nullptr);
      j["intra"] = to_json(m, intra);
      if (left) {
        j["left_invertible"] = set_to_json(m, invertible_elements(m, Side::Left));
        j["right_invertible"] =
            set_to_json(m, invertible_elements(m, Side::Right));
      } else {
        j["left_invertible"] = nullptr;
        j["right_invertible"] = nullptr;
      }
      docs.push_back(std::move(j));
      continue;
    }

    if (models.size() > 1) {
      if (idx > 0) out << '\n';
      out << "model " << idx + 1 << '\n';
    }
    out << "order: " << m.order() << '\n';
    for (Law law : all_laws) {
      auto r = check_law(m, law);
      out << law_name(law) << ": ";
      if (r.holds) {
        out << "holds\n";
      } else {
        out << "fails at " << fmt_tuple(m, *r.counterexample) << '\n';
      }
    }
    out << "LA-semigroup: " << (la ? "yes" : "no") << '\n';
    out << "left identity: " << (left ? m.label(*left) : "none") << '\n';
    out << "right identity: " << (right ? m.label(*right) : "none") << '\n';
    out << "intra-regular: " << (intra.intra_regular ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < m.order(); ++i) {
      const auto& w = intra.witnesses[i];
      const auto& a = m.labels()[i];
      if (w) {
        out << "  " << a << " = (" << m.label(w->x) << " " << a << "^2) "
            << m.label(w->y) << '\n';
      } else {
        out << "  " << a << ": no intra-regularity witness\n";
      }
    }
    if (left) {
      out << "left invertible: "
          << fmt_set(m, invertible_elements(m, Side::Left)) << '\n';
      out << "right invertible: "
          << fmt_set(m, invertible_elements(m, Side::Right)) << '\n';
    }
  }
  if (o.json) emit_json(out, std::move(docs));
  return all_la ? ExitStatus::Success : ExitStatus::PropertyFails;
}

// classify -----------------------------------------------------------------

ExitStatus cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  Magma m = load_single(o.file, in);
  ElemSet a = parse_subset(m, o.subset);
  std::optional<IdealKind> requested;
  if (!o.kind.empty()) requested = require_kind(o.kind);

  auto c = classify_subset(m, a);
  const ElemSet s = m.full_set();
  const ElemSet as_a = set_product(m, set_product(m, a, s), a);
  const ElemSet sa_s = set_product(m, set_product(m, s, a), s);
  const ElemSet aa = set_product(m, a, a);

  if (o.json) {
    Json j = to_json(m, c);
    j["AS_A"] = set_to_json(m, as_a);
    j["SA_S"] = set_to_json(m, sa_s);
    j["AA"] = set_to_json(m, aa);
    j["AS_A_equals_A"] = as_a == a;
    j["SA_S_equals_A"] = sa_s == a;
    if (requested) j["requested"] = {{"kind", kind_name(*requested)},
                                     {"holds", c[*requested]}};
    out << j.dump(2) << '\n';
  } else {
    out << "subset: " << fmt_set(m, a) << '\n';
    for (IdealKind k : all_ideal_kinds) {
      out << kind_name(k) << ": " << (c[k] ? "true" : "false") << '\n';
    }
    out << "semiprime: " << (c.semiprime ? "true" : "false") << '\n';
    out << "idempotent: " << (c.idempotent ? "true" : "false") << '\n';
    out << "(AS)A = " << fmt_set(m, as_a)
        << (as_a == a ? "  (= A ∩ S)" : "") << '\n';
    out << "(SA)S = " << fmt_set(m, sa_s)
        << (sa_s == a ? "  (= A ∩ S)" : "") << '\n';
    out << "AA = " << fmt_set(m, aa) << ((a | a) == aa ? "  (= A ∪ A)" : "")
        << '\n';
  }
  if (requested && !c[*requested]) return ExitStatus::PropertyFails;
  return ExitStatus::Success;
}

// ideals -------------------------------------------------------------------

ExitStatus cmd_ideals(const Options& o, std::istream& in, std::ostream& out) {
  Magma m = load_single(o.file, in);
  std::vector<IdealKind> kinds(all_ideal_kinds.begin(), all_ideal_kinds.end());
  if (!o.kind.empty()) kinds = {require_kind(o.kind)};

  Json doc;
  for (IdealKind k : kinds) {
    auto members = enumerate_kind(m, k);
    auto minimal = minimal_ideals(m, k);
    if (o.json) {
      Json entry;
      Json ms = Json::array();
      for (const auto& a : members) ms.push_back(set_to_json(m, a));
      Json mins = Json::array();
      for (const auto& a : minimal) mins.push_back(set_to_json(m, a));
      entry["all"] = std::move(ms);
      entry["minimal"] = std::move(mins);
      doc[std::string(kind_name(k))] = std::move(entry);
      continue;
    }
    out << kind_name(k) << " (" << members.size() << "):";
    for (const auto& a : members) out << ' ' << fmt_set(m, a);
    out << "\n  minimal:";
    for (const auto& a : minimal) out << ' ' << fmt_set(m, a);
    out << '\n';
  }
  if (o.json) out << doc.dump(2) << '\n';
  return ExitStatus::Success;
}

// intra --------------------------------------------------------------------

ExitStatus cmd_intra(const Options& o, std::istream& in, std::ostream& out) {
  auto models = load_models(o.file, in);
  bool all = true;
  std::vector<Json> docs;
  for (const Magma& m : models) {
    auto r = is_intra_regular(m);
    all = all && r.intra_regular;
    if (o.json) {
      docs.push_back(to_json(m, r));
      continue;
    }
    out << "intra-regular: " << (r.intra_regular ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < m.order(); ++i) {
      const auto& a = m.labels()[i];
      if (const auto& w = r.witnesses[i]) {
        out << a << " = (" << m.label(w->x) << " " << a << "^2) "
            << m.label(w->y) << '\n';
      } else {
        out << a << ": none\n";
      }
    }
  }
  if (o.json) emit_json(out, std::move(docs));
  return all ? ExitStatus::Success : ExitStatus::PropertyFails;
}

// enumerate ----------------------------------------------------------------

SearchConfig make_search_config(const Options& o) {
  SearchConfig cfg;
  cfg.order = o.order;
  cfg.up_to_iso = o.up_to_iso;
  for (const auto& name : o.filters) {
    auto f = parse_filter(name);
    if (!f) throw UsageError("unknown --filter '" + name + "'");
    cfg.filters.push_back(*f);
  }
  return cfg;
}

ExitStatus cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.order == 0) throw UsageError("--order must be at least 1");
  SearchConfig cfg = make_search_config(o);
  if (o.json) {
    Json models = Json::array();
    std::size_t count = enumerate_models(
        cfg, [&](const Magma& m) { models.push_back(magma_to_json(m)); });
    Json doc;
    doc["models"] = std::move(models);
    doc["count"] = count;
    out << doc.dump(2) << '\n';
    return ExitStatus::Success;
  }
  bool first = true;
  std::size_t count = enumerate_models(cfg, [&](const Magma& m) {
    if (!first) out << stream_separator << '\n';
    out << serialize_cayley(m) << '\n';
    first = false;
  });
  out << "count: " << count << '\n';
  return ExitStatus::Success;
}

// verify -------------------------------------------------------------------

std::vector<TheoremId> requested_theorems(const Options& o) {
  if (o.all) return {all_theorems.begin(), all_theorems.end()};
  auto t = parse_theorem(o.theorem);
  if (!t) throw UsageError("unknown --theorem '" + o.theorem + "'");
  return {*t};
}

void print_report(std::ostream& out, const Magma& m,
                  const VerificationReport& r) {
  out << theorem_name(r.theorem) << ": ";
  if (!r.hypotheses_met) {
    out << "hypotheses not met";
  } else {
    out << (*r.conclusion_holds ? "holds" : "FAILS");
  }
  const auto& w = r.witness;
  if (w.element) out << " [element " << m.label(*w.element) << "]";
  if (!w.subsets.empty()) {
    out << " [subsets";
    for (const auto& s : w.subsets) out << ' ' << fmt_set(m, s);
    out << "]";
  }
  if (w.direction) out << " [" << *w.direction << "]";
  if (!r.notes.empty()) out << " -- " << r.notes;
  out << '\n';
}

ExitStatus cmd_verify(const Options& o, const bool file_given, std::istream& in,
                      std::ostream& out) {
  if (!o.all && o.theorem.empty()) {
    throw UsageError("verify needs --theorem <id> or --all");
  }
  auto theorems = requested_theorems(o);

  if (o.mode.empty()) {
    if (!file_given) throw UsageError("verify needs a model file");
    auto models = load_models(o.file, in);
    bool failed = false;
    std::vector<Json> docs;
    for (std::size_t idx = 0; idx < models.size(); ++idx) {
      const Magma& m = models[idx];
      std::vector<VerificationReport> reports;
      if (o.all) {
        reports = run_all(m);
      } else {
        for (TheoremId t : theorems) reports.push_back(verify(m, t));
      }
      Json arr = Json::array();
      if (!o.json && models.size() > 1) out << "model " << idx + 1 << '\n';
      for (const auto& r : reports) {
        failed = failed || (r.conclusion_holds && !*r.conclusion_holds);
        if (o.json) {
          arr.push_back(to_json(m, r));
        } else {
          print_report(out, m, r);
        }
      }
      if (o.json) docs.push_back(std::move(arr));
    }
    if (o.json) emit_json(out, std::move(docs));
    return failed ? ExitStatus::PropertyFails : ExitStatus::Success;
  }

  SearchMode mode;
  if (o.mode == "forward") {
    mode = SearchMode::Forward;
  } else if (o.mode == "converse") {
    mode = SearchMode::Converse;
  } else {
    throw UsageError("--mode must be forward or converse");
  }
  std::vector<Magma> corpus;
  if (file_given) corpus = load_models(o.file, in);
  if (!file_given && o.order == 0) {
    throw UsageError("search needs a model file and/or --order <n>");
  }

  bool found_any = false;
  Json results = Json::array();
  for (TheoremId t : theorems) {
    auto found = search_counterexample(corpus, t, mode);
    if (!found && o.order > 0) found = search_counterexample(1, o.order, t, mode);
    found_any = found_any || found.has_value();
    if (o.json) {
      Json j;
      j["theorem"] = std::string(theorem_name(t));
      j["mode"] = o.mode;
      j["found"] = found.has_value();
      j["model"] = found ? magma_to_json(*found) : Json(nullptr);
      j["report"] = found ? to_json(*found, verify(*found, t)) : Json(nullptr);
      results.push_back(std::move(j));
      continue;
    }
    out << theorem_name(t) << " (" << o.mode << "): ";
    if (!found) {
      out << "no counterexample\n";
      continue;
    }
    out << "counterexample found\n" << serialize_cayley(*found) << '\n';
    print_report(out, *found, verify(*found, t));
  }
  if (o.json) out << results.dump(2) << '\n';
  return found_any ? ExitStatus::PropertyFails : ExitStatus::Success;
}

// affine -------------------------------------------------------------------

ExitStatus cmd_affine(const Options& o, std::ostream& out) {
  AffineParams p;
  std::vector<Rational> points;
  try {
    p.r = parse_rational(o.r);
    for (const auto& s : split_commas(o.points)) {
      points.push_back(parse_rational(s));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (o.variant == "additive") {
    p.variant = AffineVariant::Additive;
  } else if (o.variant == "multiplicative") {
    p.variant = AffineVariant::Multiplicative;
  } else {
    throw UsageError("--variant must be additive or multiplicative");
  }

  AffineReport r;
  try {
    r = check_affine_construction(p, points);
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
  if (o.json) {
    Json j;
    j["r"] = to_string(p.r);
    j["variant"] = o.variant;
    j.update(to_json(r));
    out << j.dump(2) << '\n';
  } else {
    auto fmt = [](const auto& values) {
      std::string s = "(";
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ", ";
        s += to_string(values[i]);
      }
      return s + ")";
    };
    out << "r: " << to_string(p.r) << '\n';
    out << "left-invertive: "
        << (r.left_invertive.holds ? "holds" : "fails at " +
                                                   fmt(*r.left_invertive_failure))
        << " (" << r.triples_checked << " triples)\n";
    out << "commutative: "
        << (r.non_commutative ? "fails at " + fmt(*r.non_commutative)
                              : std::string("no witness among samples"))
        << '\n';
    out << "associative: "
        << (r.non_associative ? "fails at " + fmt(*r.non_associative)
                              : std::string("no witness among samples"))
        << '\n';
  }
  return r.left_invertive.holds ? ExitStatus::Success
                                : ExitStatus::PropertyFails;
}

}  // namespace

ExitStatus run(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite LA-semigroup toolkit", "lasg"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Reserved; output is deterministic");

  auto* check = app.add_subcommand("check", "Check laws, identities, intra-regularity");
  check->add_option("file", o.file, "Cayley file or model stream ('-' = stdin)");
  check->add_flag("--json", o.json);

  auto* classify = app.add_subcommand("classify", "Classify one subset");
  classify->add_option("file", o.file)->required();
  classify->add_option("--subset", o.subset, "Comma-separated labels")->required();
  classify->add_option("--kind", o.kind, "Report exit 1 unless subset has this kind");
  classify->add_flag("--json", o.json);

  auto* ideals = app.add_subcommand("ideals", "Enumerate ideals of each kind");
  ideals->add_option("file", o.file)->required();
  ideals->add_option("--kind", o.kind);
  ideals->add_flag("--json", o.json);

  auto* intra = app.add_subcommand("intra", "Intra-regularity witnesses");
  intra->add_option("file", o.file);
  intra->add_flag("--json", o.json);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate LA-semigroups");
  enumerate->add_option("--order", o.order)->required();
  enumerate->add_flag("--up-to-iso", o.up_to_iso);
  enumerate->add_option("--filter", o.filters,
                        "has-left-identity|intra-regular|left-invertible|"
                        "right-invertible|not-intra-regular (repeatable)");
  enumerate->add_flag("--json", o.json);

  auto* verify_cmd = app.add_subcommand("verify", "Run theorem checks");
  auto* verify_file = verify_cmd->add_option("file", o.file);
  std::string theorem_ids;
  for (TheoremId t : all_theorems) {
    theorem_ids += (theorem_ids.empty() ? "" : ", ") + std::string(theorem_name(t));
  }
  verify_cmd->add_option("--theorem", o.theorem, "One of: " + theorem_ids);
  verify_cmd->add_flag("--all", o.all);
  verify_cmd->add_option("--mode", o.mode, "forward|converse counterexample search");
  verify_cmd->add_option("--order", o.order, "Also search orders 1..n");
  verify_cmd->add_flag("--json", o.json);

  auto* affine = app.add_subcommand("affine", "Check a * b = b - a - r on rationals");
  affine->add_option("--r", o.r, "p/q or integer");
  affine->add_option("--points", o.points, "Comma-separated rationals")->required();
  affine->add_option("--variant", o.variant, "additive|multiplicative");
  affine->add_flag("--json", o.json);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("lasg");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ExitStatus::Success : ExitStatus::UsageError;
  }

  try {
    if (check->parsed()) return cmd_check(o, in, out);
    if (classify->parsed()) return cmd_classify(o, in, out);
    if (ideals->parsed()) return cmd_ideals(o, in, out);
    if (intra->parsed()) return cmd_intra(o, in, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (verify_cmd->parsed()) {
      return cmd_verify(o, verify_file->count() > 0, in, out);
    }
    if (affine->parsed()) return cmd_affine(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return ExitStatus::UsageError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return ExitStatus::InputError;
  } catch (const OrderTooLarge& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return ExitStatus::LimitExceeded;
  } catch (const InsufficientPoints& e) {
    err << "input error: " << e.what() << '\n';
    return ExitStatus::InputError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return ExitStatus::UsageError;
  }
  return ExitStatus::UsageError;
}

}  // namespace lasg::cli
