#include "suspla/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "suspla/dyer_lashof.hpp"
#include "suspla/json_io.hpp"

namespace suspla {

namespace {

std::string format_vec(const SparseVec& v, const std::function<std::string(int)>& name_of) {
  if (v.is_zero()) return "0";
  std::string out;
  const auto terms = v.terms();
  for (const auto& [idx, c] : terms) {
    if (!out.empty()) out += " + ";
    if (c.is_one()) out += name_of(idx);
    else out += c.str() + "*" + name_of(idx);
  }
  return out;
}

std::string window_names(const DegreeWindow& w) {
  std::string out;
  const auto& elems = w.elements();
  for (int e : elems) {
    if (!out.empty()) out += " ";
    out += w.monoid().name(e);
  }
  return out;
}

Json window_json(const DegreeWindow& w) {
  Json j = Json::array();
  const auto& elems = w.elements();
  for (int e : elems) j.push_back(w.monoid().name(e));
  return j;
}

/* Window selection shared by the document commands.  Finite monoids always
 * get the full table; the free monoid needs an explicit exponent bound. */
DegreeWindow make_window(const Monoid& m, int bound) {
  if (m.kind() == Monoid::Kind::FreeRank1 && bound < 0)
    throw InvalidBound("the free monoid needs an explicit --window");
  return DegreeWindow::up_to(m, bound < 0 ? 0 : bound);
}

void print_witnesses(std::ostream& out, const std::vector<std::string>& ws,
                     const char* indent = "") {
  for (const auto& w : ws) out << indent << "witness: " << w << "\n";
}

int exit_of(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    default: return 2;
  }
}

struct CheckOpts {
  std::string input;
  int window = -1;
  std::string format = "text";
};

int run_check(const CheckOpts& o, std::ostream& out) {
  const Json doc = load_json_file(o.input);
  if (doc.is_object() && doc.contains("comult")) {
    const PresentedBialgebra A = bialgebra_from_json(doc);
    const auto rigid = rigid_from_json(doc, A);
    const BialgebraReport report = check_bialgebra(A);
    const std::vector<std::pair<std::string, const Verdict*>> axioms = {
        {"unital", &report.unital},
        {"associativity", &report.associativity},
        {"counit", &report.counit},
        {"coassociativity", &report.coassociativity},
        {"comult_multiplicative", &report.comult_multiplicative},
        {"counit_multiplicative", &report.counit_multiplicative},
        {"grading", &report.grading},
    };
    Verdict overall = report.overall();
    Verdict rigid_verdict;
    if (rigid.has_value()) {
      rigid_verdict = check_rigid(A, *rigid);
      overall &= rigid_verdict;
    }
    if (o.format == "json") {
      Json j = Json::object();
      j["command"] = "check";
      j["kind"] = "bialgebra";
      Json ax = Json::object();
      for (const auto& [name, v] : axioms)
        ax[name] = Json{{"status", to_string(v->status)}, {"witnesses", v->witnesses}};
      if (rigid.has_value())
        ax["rigid"] =
            Json{{"status", to_string(rigid_verdict.status)}, {"witnesses", rigid_verdict.witnesses}};
      j["axioms"] = std::move(ax);
      j["verdict"] = to_string(overall.status);
      out << dump_json(j);
    } else {
      out << "kind: bialgebra\n";
      for (const auto& [name, v] : axioms) {
        out << name << ": " << to_string(v->status) << "\n";
        print_witnesses(out, v->witnesses, "  ");
      }
      if (rigid.has_value()) {
        out << "rigid: " << to_string(rigid_verdict.status) << "\n";
        print_witnesses(out, rigid_verdict.witnesses, "  ");
      }
      out << "verdict: " << to_string(overall.status) << "\n";
    }
    return exit_of(overall.status);
  }

  const SuspensiveLie L = lie_from_json(doc);
  const DegreeWindow window = make_window(L.monoid(), o.window);
  const Verdict v = check_suspensive(L, window);
  const TorsionFlags flags = torsion_flags(L, window, /*skip_unverifiable=*/true);
  if (o.format == "json") {
    Json j = Json::object();
    j["command"] = "check";
    j["kind"] = "lie";
    j["window"] = window_json(window);
    j["torsion_free"] = flags.torsion_free;
    j["torsion"] = flags.torsion;
    j["notes"] = flags.notes;
    j["verdict"] = to_string(v.status);
    j["witnesses"] = v.witnesses;
    out << dump_json(j);
  } else {
    out << "kind: lie\n";
    out << "window: " << window_names(window) << "\n";
    out << "torsion_free: " << (flags.torsion_free ? "yes" : "no") << "\n";
    out << "torsion: " << (flags.torsion ? "yes" : "no") << "\n";
    for (const auto& n : flags.notes) out << "note: " << n << "\n";
    print_witnesses(out, v.witnesses);
    out << "verdict: " << to_string(v.status) << "\n";
  }
  return exit_of(v.status);
}

struct GpOpts {
  std::string input;
  int window = -1;
  std::string format = "text";
};

int run_gp(const GpOpts& o, std::ostream& out) {
  const Json doc = load_json_file(o.input);
  const PresentedBialgebra A = bialgebra_from_json(doc);
  const auto rigid = rigid_from_json(doc, A);
  if (!rigid.has_value()) throw SchemaError("gp needs a \"rigid\" block in the document");
  const DegreeWindow window = make_window(rigid->monoid, o.window);
  const auto name_of = [&A](int idx) { return A.name(idx); };

  const Verdict gpg = is_gpg(A, *rigid, window);
  const Verdict pgc = check_pgc(A, *rigid, window);

  if (o.format == "json") {
    Json per = Json::object();
    const auto elems = window.elements();
    for (int g : elems) {
      if (!rigid->has(g)) continue;
      const Subspace sp = gp_basis(A, *rigid, g);
      Json rows = Json::array();
      const auto& rs = sp.rows();
      for (const auto& row : rs) {
        Json jrow = Json::array();
        const auto terms = row.terms();
        for (const auto& [idx, c] : terms) jrow.push_back(Json::array({A.name(idx), c.str()}));
        rows.push_back(std::move(jrow));
      }
      per[window.monoid().name(g)] = Json{{"dim", sp.dim()}, {"basis", std::move(rows)}};
    }
    Json j = Json::object();
    j["command"] = "gp";
    j["window"] = window_json(window);
    j["per_degree"] = std::move(per);
    j["gpg"] = to_string(gpg.status);
    j["pgc"] = to_string(pgc.status);
    out << dump_json(j);
  } else {
    out << "window: " << window_names(window) << "\n";
    const auto elems = window.elements();
    for (int g : elems) {
      if (!rigid->has(g)) continue;
      const Subspace sp = gp_basis(A, *rigid, g);
      out << "gp[" << window.monoid().name(g) << "]: dim " << sp.dim() << "\n";
      const auto& rs = sp.rows();
      for (const auto& row : rs) out << "  basis: " << format_vec(row, name_of) << "\n";
    }
    out << "gpg: " << to_string(gpg.status) << "\n";
    out << "pgc: " << to_string(pgc.status) << "\n";
  }
  return 0;
}

struct EnvelopeOpts {
  std::string mode;
  std::string input;
  int window = -1;
  int lie_cap = -1;
  std::string out_path;
  std::string format = "json";
};

void print_envelope_summary(const TruncatedEnvelope& env, std::ostream& out) {
  out << "window: " << window_names(env.window) << "\n";
  out << "lie_cap: " << env.lie_cap << "\n";
  out << "dim: " << env.algebra.dim() << "\n";
  const auto elems = env.window.elements();
  for (int d : elems) {
    const auto block = env.algebra.block(d);
    out << "block[" << env.window.monoid().name(d) << "]: dim " << block.size() << "\n";
  }
  const auto dims = bidegree_dims(env);
  for (const auto& [key, count] : dims)
    out << "bidegree[" << env.window.monoid().name(key.first) << "," << key.second
        << "]: " << count << "\n";
  for (const auto& n : env.notes) out << "note: " << n << "\n";
}

int run_envelope(const EnvelopeOpts& o, std::ostream& out) {
  const SuspensiveLie L = lie_from_json(load_json_file(o.input));
  const DegreeWindow window = make_window(L.monoid(), o.window);
  TruncatedEnvelope env = [&] {
    if (o.mode == "z") {
      if (o.lie_cap < 0) throw InvalidBound("envelope z needs an explicit --lie-cap");
      return build_z(L, window, o.lie_cap);
    }
    return o.lie_cap < 0 ? build_w(L, window) : build_w(L, window, o.lie_cap);
  }();
  const Json doc = envelope_to_json(env);
  if (!o.out_path.empty()) save_json_file(o.out_path, doc);
  if (o.format == "text") print_envelope_summary(env, out);
  else if (o.out_path.empty()) out << dump_json(doc);
  return 0;
}

struct GradedOpts {
  std::string input;
  int window = -1;
  int lie_cap = -1;
  std::string out_path;
  std::string format = "json";
};

int run_graded(const GradedOpts& o, std::ostream& out) {
  const SuspensiveLie L = lie_from_json(load_json_file(o.input));
  const DegreeWindow window = make_window(L.monoid(), o.window);
  const TruncatedEnvelope env =
      o.lie_cap < 0 ? build_w(L, window) : build_w(L, window, o.lie_cap);
  const PresentedBialgebra graded = assoc_graded(env);
  const auto dims = bidegree_dims(env);

  Json doc = bialgebra_to_json(graded, &env.rigid);
  Json jd = Json::object();
  for (const auto& [key, count] : dims)
    jd[window.monoid().name(key.first)][std::to_string(key.second)] = count;
  doc["bidegree_dims"] = std::move(jd);
  doc["window"] = window_json(window);
  doc["lie_cap"] = env.lie_cap;

  if (!o.out_path.empty()) save_json_file(o.out_path, doc);
  if (o.format == "text") {
    out << "window: " << window_names(window) << "\n";
    out << "lie_cap: " << env.lie_cap << "\n";
    for (const auto& [key, count] : dims)
      out << "bidegree[" << window.monoid().name(key.first) << "," << key.second
          << "]: " << count << "\n";
  } else if (o.out_path.empty()) {
    out << dump_json(doc);
  }
  return 0;
}

struct MmOpts {
  std::string mode;
  std::string input;
  int window = -1;
  int lie_cap = -1;
  std::uint64_t seed = 0;
  std::string format = "text";
};

int run_mm(const MmOpts& o, std::ostream& out) {
  const SuspensiveLie L = lie_from_json(load_json_file(o.input));
  const DegreeWindow window = make_window(L.monoid(), o.window);
  int cap = o.lie_cap;
  if (cap < 0)
    cap = L.monoid().kind() == Monoid::Kind::FreeRank1 ? std::max(1, o.window) : 4;
  const MMReport report = o.mode == "tf" ? verify_mm_torsion_free(L, window, cap)
                                         : verify_mm_left_sided(L, window, cap);
  if (o.format == "json") {
    out << dump_json(mm_report_to_json(report, window, o.seed));
  } else {
    out << "mode: " << o.mode << "\n";
    out << "window: " << window_names(window) << "\n";
    out << "lie_cap: " << cap << "\n";
    out << "seed: " << o.seed << "\n";
    for (const auto& [degree, labels] : report.per_degree_dims) {
      out << "dims[" << window.monoid().name(degree) << "]:";
      for (const auto& [label, d] : labels) out << " " << label << "=" << d;
      out << "\n";
    }
    print_witnesses(out, report.witnesses);
    out << "verdict: " << to_string(report.verdict) << "\n";
  }
  return exit_of(report.verdict);
}

struct DlOpts {
  int p = 2;
  int e = 0;
  int degree_cap = 64;
  int degree = 0;
  int length_bound = -1;
  std::vector<std::string> words;
  std::string format = "text";
};

Json element_terms_json(const DLElement& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back(Json::array({c, format_dl_word(w)}));
  return terms;
}

int run_dl_normalize(const DlOpts& o, std::ostream& out) {
  const DLConfig cfg{o.p, o.e, o.degree_cap};
  std::vector<DLWord> parsed;
  for (const auto& text : o.words) parsed.push_back(parse_dl_word(text, o.p));

  const int n = static_cast<int>(parsed.size());
  std::vector<DLElement> results(parsed.size());
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int k = 0; k < n; ++k) results[k] = normalize(parsed[k], cfg);
  } else {
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (int k = next.fetch_add(1); k < n; k = next.fetch_add(1)) {
          try {
            results[k] = normalize(parsed[k], cfg);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  if (o.format == "json") {
    Json rs = Json::array();
    for (int k = 0; k < n; ++k)
      rs.push_back(Json{{"input", o.words[k]},
                        {"normal_form", format_dl_element(results[k])},
                        {"terms", element_terms_json(results[k])}});
    Json j = Json::object();
    j["command"] = "dl normalize";
    j["p"] = o.p;
    j["e"] = o.e;
    j["results"] = std::move(rs);
    out << dump_json(j);
  } else {
    for (const auto& r : results) out << format_dl_element(r) << "\n";
  }
  return 0;
}

int run_dl_basis(const DlOpts& o, std::ostream& out) {
  const DLConfig cfg{o.p, o.e, o.degree_cap};
  const std::vector<DLWord> words = basis_in_degree(cfg, o.degree, o.length_bound);
  if (o.format == "json") {
    Json ws = Json::array();
    for (const auto& w : words) ws.push_back(format_dl_word(w));
    Json j = Json::object();
    j["command"] = "dl basis";
    j["p"] = o.p;
    j["e"] = o.e;
    j["degree"] = o.degree;
    j["count"] = words.size();
    j["basis"] = std::move(ws);
    out << dump_json(j);
  } else {
    for (const auto& w : words) out << format_dl_word(w) << "\n";
  }
  return 0;
}

int run_dl_coproduct(const DlOpts& o, std::ostream& out) {
  const DLConfig cfg{o.p, o.e, o.degree_cap};
  const DLWord w = parse_dl_word(o.words.front(), o.p);
  const DLTensor t = coproduct_word(w, cfg);
  if (o.format == "json") {
    Json terms = Json::array();
    for (const auto& [legs, c] : t.terms)
      terms.push_back(Json::array({c, format_dl_word(legs.first), format_dl_word(legs.second)}));
    Json j = Json::object();
    j["command"] = "dl coproduct";
    j["p"] = o.p;
    j["e"] = o.e;
    j["input"] = o.words.front();
    j["terms"] = std::move(terms);
    out << dump_json(j);
  } else {
    out << format_dl_tensor(t) << "\n";
  }
  return 0;
}

int run_dl_e0(const DlOpts& o, std::ostream& out) {
  const DLConfig cfg{o.p, o.e, o.degree_cap};
  const DLElement x = normalize(parse_dl_word(o.words[0], o.p), cfg);
  const DLElement y = normalize(parse_dl_word(o.words[1], o.p), cfg);
  const E0Product prod = e0_multiply(x, y, cfg);
  if (o.format == "json") {
    Json j = Json::object();
    j["command"] = "dl e0";
    j["p"] = o.p;
    j["e"] = o.e;
    j["value"] = format_dl_element(prod.value);
    j["terms"] = element_terms_json(prod.value);
    j["internal_degree"] = prod.internal_degree;
    j["level"] = prod.level;
    out << dump_json(j);
  } else {
    out << "value: " << format_dl_element(prod.value) << "\n";
    out << "internal_degree: " << prod.internal_degree << "\n";
    out << "level: " << prod.level << "\n";
  }
  return 0;
}

void add_format_flag(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int worker_count() {
  const char* env = std::getenv("SUSPLA_THREADS");
  if (env != nullptr && *env != '\0') {
    try {
      size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::strlen(env) && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw SchemaError("SUSPLA_THREADS must be a positive integer");
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact workbench for suspensive Lie algebras, rigid bialgebras, and envelopes"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CheckOpts check_opts;
  auto* cmd_check = app.add_subcommand("check", "verify the axioms of a lie or bialgebra document");
  cmd_check->add_option("input", check_opts.input, "JSON document")->required();
  cmd_check->add_option("--window", check_opts.window, "exponent bound for free-monoid degrees");
  add_format_flag(cmd_check, check_opts.format);

  GpOpts gp_opts;
  auto* cmd_gp = app.add_subcommand("gp", "generalized primitives of a rigid bialgebra document");
  cmd_gp->add_option("input", gp_opts.input, "bialgebra JSON document with a rigid block")->required();
  cmd_gp->add_option("--window", gp_opts.window, "exponent bound for free-monoid degrees");
  add_format_flag(cmd_gp, gp_opts.format);

  EnvelopeOpts env_opts;
  auto* cmd_env = app.add_subcommand("envelope", "build the truncated envelope W or its quotient Z");
  cmd_env->add_option("mode", env_opts.mode, "w or z")->required()->check(CLI::IsMember({"w", "z"}));
  cmd_env->add_option("input", env_opts.input, "lie JSON document")->required();
  cmd_env->add_option("--window", env_opts.window, "exponent bound for free-monoid degrees");
  cmd_env->add_option("--lie-cap", env_opts.lie_cap,
                      "word length cap (default: derived for w, required for z)");
  cmd_env->add_option("--out", env_opts.out_path, "write the JSON document to this file");
  add_format_flag(cmd_env, env_opts.format);

  GradedOpts graded_opts;
  auto* cmd_graded =
      app.add_subcommand("graded", "associated graded of the Lie filtration of W");
  cmd_graded->add_option("input", graded_opts.input, "lie JSON document")->required();
  cmd_graded->add_option("--window", graded_opts.window, "exponent bound for free-monoid degrees");
  cmd_graded->add_option("--lie-cap", graded_opts.lie_cap, "word length cap (default: derived)");
  cmd_graded->add_option("--out", graded_opts.out_path, "write the JSON document to this file");
  add_format_flag(cmd_graded, graded_opts.format);

  MmOpts mm_opts;
  auto* cmd_mm = app.add_subcommand("mm", "equivalence verification for a lie document");
  cmd_mm->add_option("mode", mm_opts.mode, "tf (torsion-free) or ls (left-sided)")
      ->required()
      ->check(CLI::IsMember({"tf", "ls"}));
  cmd_mm->add_option("input", mm_opts.input, "lie JSON document")->required();
  cmd_mm->add_option("--window", mm_opts.window, "exponent bound for free-monoid degrees");
  cmd_mm->add_option("--lie-cap", mm_opts.lie_cap,
                     "word length cap (default: the window bound, or 4 for finite monoids)");
  cmd_mm->add_option("--seed", mm_opts.seed, "seed recorded in the report");
  add_format_flag(cmd_mm, mm_opts.format);

  DlOpts dl_opts;
  auto* cmd_dl = app.add_subcommand("dl", "Adem rewriting and the excess quotients");
  cmd_dl->require_subcommand(1);
  auto add_dl_common = [&dl_opts](CLI::App* sub) {
    sub->add_option("--p", dl_opts.p, "prime")->required();
    sub->add_option("--e", dl_opts.e, "excess threshold of the quotient");
    sub->add_option("--degree-cap", dl_opts.degree_cap, "largest accepted internal degree");
    add_format_flag(sub, dl_opts.format);
  };
  auto* dl_norm = cmd_dl->add_subcommand("normalize", "admissible normal forms of words");
  add_dl_common(dl_norm);
  dl_norm->add_option("words", dl_opts.words, "words like \"Q3 Q1\"")->required()->expected(-1);
  auto* dl_basis = cmd_dl->add_subcommand("basis", "admissible basis of one internal degree");
  add_dl_common(dl_basis);
  dl_basis->add_option("--degree", dl_opts.degree, "internal degree")->required();
  dl_basis->add_option("--length-bound", dl_opts.length_bound,
                       "cap on word length (required for e < 0)");
  auto* dl_cop = cmd_dl->add_subcommand("coproduct", "coproduct of a word, both legs normalized");
  add_dl_common(dl_cop);
  dl_cop->add_option("words", dl_opts.words, "one word")->required()->expected(1);
  auto* dl_e0 = cmd_dl->add_subcommand("e0", "product in the associated graded of the K-adic filtration");
  add_dl_common(dl_e0);
  dl_e0->add_option("words", dl_opts.words, "two words")->required()->expected(2);

  std::vector<std::string> argv_storage;
  argv_storage.push_back("suspla");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::Schema);
  }

  try {
    err << kVersion << "\n";
    worker_count();
    if (cmd_check->parsed()) return run_check(check_opts, out);
    if (cmd_gp->parsed()) return run_gp(gp_opts, out);
    if (cmd_env->parsed()) return run_envelope(env_opts, out);
    if (cmd_graded->parsed()) return run_graded(graded_opts, out);
    if (cmd_mm->parsed()) return run_mm(mm_opts, out);
    if (cmd_dl->parsed()) {
      if (dl_norm->parsed()) return run_dl_normalize(dl_opts, out);
      if (dl_basis->parsed()) return run_dl_basis(dl_opts, out);
      if (dl_cop->parsed()) return run_dl_coproduct(dl_opts, out);
      if (dl_e0->parsed()) return run_dl_e0(dl_opts, out);
    }
    throw SchemaError("no subcommand selected");
  } catch (const Error& e) {
    err << e.what() << "\n";
    return static_cast<int>(e.code);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Indeterminate);
  }
}

}  // namespace suspla
