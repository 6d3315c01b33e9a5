#include "oddsym/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddsym/combinatorics.hpp"
#include "oddsym/oh.hpp"
#include "oddsym/onh.hpp"
#include "oddsym/osym.hpp"
#include "oddsym/rouquier.hpp"
#include "oddsym/verify.hpp"

namespace oddsym {

namespace {

using nlohmann::json;
constexpr int kSchema = 1;

struct Opts {
  int ell = -1, k = 0, n = -1, degree = -1;
  std::string lambda, mu, perm, suite = "all", format = "json";
  std::uint64_t seed = 1;
  int max_ell = -1, max_degree = -1;
  bool timings = false;
};

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::string cur;
  for (char ch : s + " ") {
    if (std::isdigit(static_cast<unsigned char>(ch))) cur += ch;
    else if (ch == '-') throw Usage("negative entry in '" + s + "'");
    else if (!cur.empty()) {
      v.push_back(std::stoi(cur));
      cur.clear();
    }
  }
  return v;
}

Partition parse_partition(const std::string& s) {
  Partition l = parse_ints(s);
  for (size_t i = 1; i < l.size(); ++i)
    if (l[i] > l[i - 1]) throw Usage("not a partition: '" + s + "'");
  return trim(l);
}

Perm parse_perm(const std::string& s) {
  std::vector<int> v = parse_ints(s);
  Perm w(v.size());
  std::vector<bool> seen(v.size() + 1);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > static_cast<int>(v.size()) || seen[v[i]]) throw Usage("not a permutation: '" + s + "'");
    seen[v[i]] = true;
    w[i] = v[i] - 1;
  }
  return w;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

void need(bool cond, const std::string& msg) {
  if (!cond) throw Usage(msg);
}

json header(const std::string& cmd) { return {{"schema", kSchema}, {"command", cmd}}; }

std::string matrix_out(const std::string& cmd, json j, const std::vector<std::string>& rows,
                       const std::vector<std::string>& cols, const std::vector<std::vector<i64>>& m,
                       const std::string& fmt) {
  std::ostringstream os;
  if (fmt == "json") {
    j["rows"] = rows;
    j["cols"] = cols;
    j["matrix"] = m;
    os << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    os << cmd;
    for (auto& c : cols) os << "," << csv_cell(c);
    os << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      os << csv_cell(rows[i]);
      for (auto x : m[i]) os << "," << x;
      os << "\n";
    }
  } else {
    size_t w = 2;
    for (auto& r : rows) w = std::max(w, r.size());
    for (auto& c : cols) w = std::max(w, c.size());
    os << std::setw(static_cast<int>(w)) << "";
    for (auto& c : cols) os << " " << std::setw(static_cast<int>(w)) << c;
    os << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      os << std::setw(static_cast<int>(w)) << rows[i];
      for (auto x : m[i]) os << " " << std::setw(static_cast<int>(w)) << x;
      os << "\n";
    }
  }
  return os.str();
}

std::string sym_out(json j, const Sym& x, char basis, const std::string& fmt) {
  std::ostringstream os;
  if (fmt == "json") {
    json terms = json::array();
    for (auto& [l, c] : x) terms.push_back({{"lambda", l}, {"coeff", c}});
    j["basis"] = std::string(1, basis);
    j["terms"] = terms;
    os << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    os << "lambda,coeff\n";
    for (auto& [l, c] : x) os << csv_cell(pstr(l)) << "," << c << "\n";
  } else {
    os << sym_str(x, basis) << "\n";
  }
  return os.str();
}

std::string cmd_kostka(const Opts& o) {
  need(o.degree >= 0, "kostka needs --degree >= 0");
  auto ps = partitions_of(o.degree);
  std::vector<std::string> names;
  std::vector<std::vector<i64>> m;
  for (auto& l : ps) {
    names.push_back(pstr(l));
    m.emplace_back();
    for (auto& mu : ps) m.back().push_back(kostka(l, mu));
  }
  json j = header("kostka");
  j["degree"] = o.degree;
  return matrix_out("kostka", j, names, names, m, o.format);
}

std::string cmd_lr(const Opts& o) {
  Partition l = parse_partition(o.lambda), m = parse_partition(o.mu);
  json j = header("lr");
  j["lambda"] = l;
  j["mu"] = m;
  return sym_out(j, lr(l, m), 's', o.format);
}

std::string cmd_schur_expand(const Opts& o) {
  Partition l = parse_partition(o.lambda);
  json j = header("schur-expand");
  j["lambda"] = l;
  return sym_out(j, schur(l), 'h', o.format);
}

std::string cmd_schubert(const Opts& o) {
  std::vector<Perm> ws;
  if (!o.perm.empty()) ws.push_back(parse_perm(o.perm));
  else {
    need(o.n >= 1 && o.n <= 6, "schubert needs --perm or 1 <= --n <= 6");
    ws = all_perms(o.n);
  }
  std::ostringstream os;
  json j = header("schubert"), list = json::array();
  if (o.format == "csv") os << "perm,length,polynomial\n";
  for (auto& w : ws) {
    std::vector<int> one;
    for (int x : w) one.push_back(x + 1);
    OPol p = schubert(w);
    std::string ps = pstr(one);
    if (o.format == "json") list.push_back({{"perm", one}, {"length", perm_len(w)}, {"text", p.str()}, {"poly", p.to_json()}});
    else if (o.format == "csv") os << csv_cell(ps) << "," << perm_len(w) << "," << csv_cell(p.str()) << "\n";
    else os << ps << "  " << p.str() << "\n";
  }
  if (o.format == "json") {
    j["polynomials"] = list;
    os << j.dump(2) << "\n";
  }
  return os.str();
}

void need_ell_n(const Opts& o, const std::string& cmd) {
  need(o.ell >= 0 && o.n >= 0 && o.n <= o.ell, cmd + " needs 0 <= --n <= --ell");
}

std::string cmd_oh_rank(const Opts& o) {
  need_ell_n(o, "oh-rank");
  GP s;
  for (auto& l : oh_basis(o.n, o.ell)) s += pq2(psize(l));
  std::ostringstream os;
  if (o.format == "json") {
    json j = header("oh-rank");
    j["ell"] = o.ell;
    j["n"] = o.n;
    j["rank"] = s.str();
    j["poly"] = s.to_json();
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "ell,n,rank\n" << o.ell << "," << o.n << "," << csv_cell(s.str()) << "\n";
  } else {
    os << s.str() << "\n";
  }
  return os.str();
}

std::string cmd_trace_gram(const Opts& o) {
  need_ell_n(o, "trace-gram");
  std::vector<std::string> names;
  for (auto& l : oh_basis(o.n, o.ell)) names.push_back(pstr(l));
  json j = header("trace-gram");
  j["ell"] = o.ell;
  j["n"] = o.n;
  return matrix_out("trace-gram", j, names, names, trace_gram(o.n, o.ell), o.format);
}

std::string report_out(const std::string& cmd, json j, const std::vector<SuiteReport>& reps, const Opts& o) {
  std::ostringstream os;
  bool ok = std::all_of(reps.begin(), reps.end(), [](auto& r) { return r.ok(); });
  if (o.format == "json") {
    j["ok"] = ok;
    j["suites"] = json::array();
    for (auto& r : reps) j["suites"].push_back(r.to_json(o.timings));
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "suite,check,ok,cases,witness\n";
    for (auto& r : reps)
      for (auto& c : r.checks)
        os << r.suite << "," << csv_cell(c.name) << "," << (c.ok ? "true" : "false") << "," << c.cases << ","
           << csv_cell(c.witness) << "\n";
  } else {
    for (auto& r : reps) {
      os << r.suite << ": " << (r.ok() ? "PASS" : "FAIL");
      if (o.timings) os << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
      os << "\n";
      for (auto& c : r.checks) {
        os << "  " << (c.ok ? "ok  " : "FAIL") << " " << c.name << " [" << c.cases << "]";
        if (!c.ok) os << "  " << c.witness;
        os << "\n";
      }
    }
    os << cmd << ": " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return os.str();
}

std::string cmd_rouquier(const Opts& o, std::vector<SuiteReport>& reps) {
  RouquierComplex c;
  try {
    c = build_complex(o.ell, o.k);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
  reps.push_back(verify_src(c));
  if (o.format == "json") {
    json j = header("rouquier");
    j["complex"] = complex_json(c);
    return report_out("rouquier", j, reps, o);
  }
  std::ostringstream os;
  if (o.format == "csv") {
    os << "d,dim,image,homology\n";
    for (auto& t : c.terms)
      os << t.d << "," << csv_cell(term_dim(t).str()) << "," << csv_cell(image_dim(c, t.d).str()) << ","
         << csv_cell(homology_dim(c, t.d).str()) << "\n";
    return os.str();
  }
  os << "ell=" << c.ell << " k=" << c.k << " n=" << c.n << "\n";
  for (auto& t : c.terms)
    os << "  d=" << t.d << "  dim " << term_dim(t).str() << "  H " << homology_dim(c, t.d).str() << "\n";
  return os.str() + report_out("rouquier", json(), reps, o);
}

std::string cmd_verify(const Opts& o, std::vector<SuiteReport>& reps) {
  std::vector<std::string> names;
  if (o.suite == "all") names = suite_names();
  else {
    auto all = suite_names();
    need(std::find(all.begin(), all.end(), o.suite) != all.end(), "unknown suite: " + o.suite);
    names = {o.suite};
  }
  Bounds b;
  b.max_ell = o.max_ell;
  b.max_degree = o.max_degree;
  b.seed = o.seed;
  std::vector<std::future<SuiteReport>> jobs;
  for (auto& s : names) jobs.push_back(std::async(std::launch::async, [s, b] { return run_suite(s, b); }));
  for (auto& f : jobs) reps.push_back(f.get());
  json j = header("verify");
  j["seed"] = o.seed;
  j["bounds"] = {{"max_ell", o.max_ell}, {"max_degree", o.max_degree}};
  return report_out("verify", j, reps, o);
}

std::string cache_name(const std::vector<std::string>& args) {
  std::string s;
  for (auto& a : args) {
    for (char c : a) s += std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_';
    s += '.';
  }
  return s + "out";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with odd symmetric functions and odd Grassmannian bimodules", "oddsym"};
  app.require_subcommand(1);
  Opts o;
  auto fmt = [&](CLI::App* s) {
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* kos = app.add_subcommand("kostka", "signed Kostka matrix in a given degree");
  kos->add_option("--degree", o.degree)->required();
  auto* lrc = app.add_subcommand("lr", "product of two Schur functions in the Schur basis");
  lrc->add_option("--lambda", o.lambda)->required();
  lrc->add_option("--mu", o.mu)->required();
  auto* sch = app.add_subcommand("schur-expand", "Schur function in the complete basis");
  sch->add_option("--lambda", o.lambda)->required();
  auto* sub = app.add_subcommand("schubert", "Schubert polynomials");
  sub->add_option("--n", o.n, "all permutations of n letters");
  sub->add_option("--perm", o.perm, "one-line notation, e.g. 2,3,1");
  auto* ohr = app.add_subcommand("oh-rank", "graded rank of the Grassmannian cohomology over R");
  auto* trg = app.add_subcommand("trace-gram", "specialised trace pairing on the Schur basis");
  for (auto* s : {ohr, trg}) {
    s->add_option("--ell", o.ell)->required();
    s->add_option("--n", o.n)->required();
  }
  auto* rq = app.add_subcommand("rouquier", "build and check the Rouquier complex");
  rq->add_option("--ell", o.ell)->required();
  rq->add_option("--k", o.k)->required();
  auto* ver = app.add_subcommand("verify", "run invariant suites");
  auto sn = suite_names();
  sn.push_back("all");
  ver->add_option("--suite", o.suite)->check(CLI::IsMember(sn));
  ver->add_option("--max-ell", o.max_ell);
  ver->add_option("--max-degree", o.max_degree);
  ver->add_option("--seed", o.seed);
  for (auto* s : {kos, lrc, sch, sub, ohr, trg, rq, ver}) fmt(s);
  for (auto* s : {rq, ver}) s->add_flag("--timings", o.timings, "include wall-clock times (not reproducible)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string cache_dir;
  if (const char* d = std::getenv("ODDSYM_CACHE_DIR")) cache_dir = d;
  bool cacheable = !cache_dir.empty() && !ver->parsed() && !o.timings;
  std::filesystem::path cache_file;
  if (cacheable) {
    cache_file = std::filesystem::path(cache_dir) / ("v" + std::to_string(kSchema) + "." + cache_name(args));
    std::ifstream in(cache_file);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      out << buf.str();
      return 0;
    }
  }

  std::vector<SuiteReport> reps;
  std::string text;
  try {
    if (kos->parsed()) text = cmd_kostka(o);
    else if (lrc->parsed()) text = cmd_lr(o);
    else if (sch->parsed()) text = cmd_schur_expand(o);
    else if (sub->parsed()) text = cmd_schubert(o);
    else if (ohr->parsed()) text = cmd_oh_rank(o);
    else if (trg->parsed()) text = cmd_trace_gram(o);
    else if (rq->parsed()) text = cmd_rouquier(o, reps);
    else text = cmd_verify(o, reps);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << text;

  for (auto& r : reps)
    for (auto& c : r.checks)
      if (!c.ok) {
        err << r.suite << ": " << c.name << ": " << c.witness << "\n";
        return 1;
      }
  if (cacheable) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    std::ofstream(cache_file) << text;
  }
  return 0;
}

}  // namespace oddsym
