#include "jobs.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "affeis/central_extension.hpp"
#include "affeis/dynkin.hpp"
#include "affeis/eisenstein.hpp"
#include "affeis/lattice.hpp"
#include "affeis/tame_symbol.hpp"

namespace affeis::cli {

using json = nlohmann::ordered_json;

namespace {

// Raised for job-level rejections that are not library errors.
class JobError : public std::runtime_error {
 public:
  JobError(std::string kind, const std::string& what, int code)
      : std::runtime_error(what), kind_(std::move(kind)), code_(code) {}
  const std::string& kind() const { return kind_; }
  int code() const { return code_; }

 private:
  std::string kind_;
  int code_;
};

struct CommandInfo {
  std::vector<std::string> params;
  std::vector<std::string> flags;
  bool uses_type;
};

const std::map<std::string, CommandInfo>& command_table() {
  static const std::map<std::string, CommandInfo> t = {
      {"roots", {{}, {}, true}},
      {"weyl", {{"max-length"}, {}, true}},
      {"gk", {{"s", "radius"}, {}, true}},
      {"constant-term", {{"s", "q", "log-q", "radius"}, {"log-terms"}, true}},
      {"constant-term-char", {{"mu0", "sigma", "kappa", "q", "log-q", "radius"}, {"restrict-coset", "log-terms"}, true}},
      {"fourier-sl2", {{"z0", "z1", "q", "log-q", "n-max"}, {}, false}},
      {"tame", {{"p", "x", "y", "samples", "seed"}, {}, false}},
      {"cocycle-check", {{"p", "max-exp", "m-max", "samples", "seed"}, {}, false}},
      {"dynkin", {{}, {}, true}},
      {"sweep", {{}, {}, true}},
  };
  return t;
}

const std::vector<std::string> kSweepable = {"gk", "constant-term", "constant-term-char", "fourier-sl2"};

std::vector<std::string> all_params() {
  std::set<std::string> s;
  for (const auto& [c, info] : command_table()) s.insert(info.params.begin(), info.params.end());
  return {s.begin(), s.end()};
}

std::vector<std::string> all_flags() {
  std::set<std::string> s;
  for (const auto& [c, info] : command_table()) s.insert(info.flags.begin(), info.flags.end());
  return {s.begin(), s.end()};
}

double parse_double(const std::string& name, const std::string& v) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ParseError("--" + name + ": not a number: '" + v + "'");
  }
  if (used != v.size() || !std::isfinite(x)) throw ParseError("--" + name + ": not a number: '" + v + "'");
  return x;
}

std::int64_t parse_int(const std::string& name, const std::string& v) {
  double x = parse_double(name, v);
  if (x != std::floor(x) || std::abs(x) > 1e15) throw ParseError("--" + name + ": not an integer: '" + v + "'");
  return static_cast<std::int64_t>(x);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "re" or "re,im"
cplx parse_complex(const std::string& name, const std::string& v) {
  auto parts = split(v, ',');
  if (parts.size() == 1) return {parse_double(name, parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(name, parts[0]), parse_double(name, parts[1])};
  throw ParseError("--" + name + ": expected re or re,im");
}

bool is_range(const std::string& v) { return v.find(':') != std::string::npos; }

std::vector<double> parse_range(const std::string& name, const std::string& v) {
  auto parts = split(v, ':');
  if (parts.size() != 3) throw ParseError("--" + name + ": a range is start:stop:step");
  double a = parse_double(name, parts[0]), b = parse_double(name, parts[1]), h = parse_double(name, parts[2]);
  if (!(h > 0) || b < a) throw ParseError("--" + name + ": a range needs step > 0 and stop >= start");
  std::vector<double> out;
  for (std::int64_t k = 0;; ++k) {
    double x = a + static_cast<double>(k) * h;
    if (x > b + 1e-9 * h) break;
    out.push_back(x);
    if (out.size() > 100000) throw ParseError("--" + name + ": range has too many points");
  }
  return out;
}

class Params {
 public:
  explicit Params(const JobSpec& j) : j_(j) {}
  bool has(const std::string& k) const { return j_.params.count(k) > 0; }
  bool flag(const std::string& k) const {
    return std::find(j_.flags.begin(), j_.flags.end(), k) != j_.flags.end();
  }
  const std::string& raw(const std::string& k) const {
    auto it = j_.params.find(k);
    if (it == j_.params.end()) throw ParseError("missing --" + k);
    return it->second;
  }
  double real(const std::string& k, double def) const { return has(k) ? parse_double(k, raw(k)) : def; }
  double real(const std::string& k) const { return parse_double(k, raw(k)); }
  std::int64_t integer(const std::string& k, std::int64_t def) const { return has(k) ? parse_int(k, raw(k)) : def; }
  cplx complex(const std::string& k) const { return parse_complex(k, raw(k)); }
  cplx complex(const std::string& k, cplx def) const { return has(k) ? parse_complex(k, raw(k)) : def; }

  double log_q() const {
    if (has("q") && has("log-q")) throw ParseError("give only one of --q and --log-q");
    if (has("log-q")) return real("log-q");
    double q = real("q", 2.0);
    if (!(q > 0)) throw Error(ErrorKind::QNotExpanding, "|q| must be > 1");
    return std::log(q);
  }

 private:
  const JobSpec& j_;
};

json cjson(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }
json rjson(const Rational& r) { return json{{"num", r.numerator()}, {"den", r.denominator()}}; }

json wjson(const FiniteCartanData& d, const AffineWeylElement& w) {
  return json{{"gamma", w.translation}, {"word", reduced_word(d, w)}};
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}
std::string join(const std::vector<int>& v) { return join(std::vector<std::int64_t>(v.begin(), v.end())); }

std::string num(double x) { return format_double(x); }

FiniteCartanData cartan_of(const JobSpec& j) { return build_cartan(j.type, j.rank); }

// ---- commands

Artifact roots(const JobSpec& j) {
  auto d = cartan_of(j);
  Artifact a;
  json pos = json::array();
  for (const auto& r : d.positive_roots) pos.push_back(r);
  json pairs = json::array();
  const RatWeight rt = rho_tilde(d);
  for (int i = 0; i <= d.rank; ++i) pairs.push_back(rjson(pair(rt, affine_simple_coroot(d, i))));
  std::int64_t order = static_cast<std::int64_t>(enumerate_finite_weyl(d).size());
  a.result = json{{"label", d.label()},
                  {"num_positive_roots", d.num_positive()},
                  {"weyl_order", order},
                  {"coxeter_number", d.coxeter_h},
                  {"dual_coxeter_number", d.dual_coxeter_hv},
                  {"highest_root", d.theta()},
                  {"positive_roots", pos},
                  {"rho_tilde_on_simple_coroots", pairs}};
  a.table.header = {"index", "root", "height", "norm_sq"};
  for (std::size_t k = 0; k < d.positive_roots.size(); ++k) {
    const auto& r = d.positive_roots[k];
    a.table.rows.push_back({std::to_string(k), join(r), std::to_string(height(r)), to_string(root_norm_sq(d, r))});
  }
  return a;
}

Artifact weyl(const JobSpec& j) {
  auto d = cartan_of(j);
  Params p(j);
  const std::int64_t L = p.integer("max-length", 3);
  if (L < 0 || L > 12) throw Error(ErrorKind::InvalidArgument, "--max-length must be in [0, 12]");
  Artifact a;
  json els = json::array();
  a.table.header = {"length", "word", "gamma"};
  for (const auto& w : enumerate_by_length(d, static_cast<int>(L))) {
    auto word = reduced_word(d, w);
    els.push_back(json{{"element", wjson(d, w)}, {"length", word.size()}});
    a.table.rows.push_back({std::to_string(word.size()), join(word), join(w.translation)});
  }
  a.result = json{{"count", els.size()}, {"elements", els}};
  return a;
}

Artifact gk(const JobSpec& j) {
  auto d = cartan_of(j);
  Params p(j);
  const cplx s = p.complex("s");
  const double radius = p.real("radius", 2.0);
  if (!(s.real() > godement_threshold(d)))
    throw Error(ErrorKind::GodementViolated, "Godement's criterion needs Re s > h + h^vee = " +
                                                 std::to_string(d.coxeter_h + d.dual_coxeter_hv));
  if (!(radius >= 0)) throw Error(ErrorKind::InvalidArgument, "--radius must be >= 0");
  Artifact a;
  json rows = json::array();
  a.table.header = {"gamma", "word", "length", "c_re", "c_im"};
  for (const auto& w : enumerate_min_coset_reps(d, radius)) {
    cplx c = gk_coefficient(d, w, s);
    auto word = reduced_word(d, w);
    rows.push_back(json{{"w", wjson(d, w)}, {"length", word.size()}, {"c_w", cjson(c)}});
    a.table.rows.push_back({join(w.translation), join(word), std::to_string(word.size()), num(c.real()), num(c.imag())});
  }
  a.result = json{{"godement_threshold", godement_threshold(d)}, {"count", rows.size()}, {"coefficients", rows}};
  return a;
}

Artifact series_artifact(const FiniteCartanData& d, const SeriesResult& r, bool log_terms) {
  Artifact a;
  a.result = json{{"value", cjson(r.value)}, {"tail_bound", r.tail_bound}, {"terms_used", r.terms_used}};
  if (log_terms) {
    json t = json::array();
    for (const auto& x : r.per_term_log) t.push_back(json{{"w", wjson(d, x.w)}, {"term", cjson(x.value)}});
    a.result["terms"] = t;
  }
  a.table.header = {"value_re", "value_im", "tail_bound", "terms_used"};
  a.table.rows.push_back({num(r.value.real()), num(r.value.imag()), num(r.tail_bound), std::to_string(r.terms_used)});
  return a;
}

Artifact constant_term(const JobSpec& j) {
  auto d = cartan_of(j);
  Params p(j);
  const cplx s = p.complex("s");
  const double lq = p.log_q();
  TorusLogPoint g{std::vector<double>(d.rank, 0.0), 0.0, lq};
  auto r = constant_term_height(d, s, g, p.real("radius", 3.0), p.flag("log-terms"));
  return series_artifact(d, r, p.flag("log-terms"));
}

Artifact constant_term_char_job(const JobSpec& j) {
  auto d = cartan_of(j);
  Params p(j);
  auto parts = split(p.raw("mu0"), ',');
  if (static_cast<int>(parts.size()) != d.rank)
    throw Error(ErrorKind::DimensionMismatch, "--mu0 needs " + std::to_string(d.rank) + " comma-separated values");
  ComplexWeight mu;
  for (const auto& x : parts) mu.mu0.emplace_back(parse_double("mu0", x), 0.0);
  mu.kappa = p.complex("kappa", 0.0);
  mu.sigma = p.complex("sigma");
  TorusLogPoint g{std::vector<double>(d.rank, 0.0), 0.0, p.log_q()};
  auto r = constant_term_char(d, {mu}, g, p.real("radius", 3.0), p.flag("restrict-coset"), p.flag("log-terms"));
  return series_artifact(d, r, p.flag("log-terms"));
}

Artifact fourier(const JobSpec& j) {
  Params p(j);
  const std::int64_t n_max = p.integer("n-max", 4);
  if (n_max < 0 || n_max > 50) throw Error(ErrorKind::InvalidArgument, "--n-max must be in [0, 50]");
  auto f = sl2_fourier_psi1(p.complex("z0"), p.complex("z1"), p.log_q(), static_cast<int>(n_max));
  Artifact a;
  json terms = json::array();
  cplx partial = 0;
  a.table.header = {"n", "first_re", "first_im", "second_re", "second_im", "partial_re", "partial_im"};
  for (const auto& t : f.terms) {
    partial += t.first + t.second;
    terms.push_back(json{{"n", t.n}, {"first", cjson(t.first)}, {"second", cjson(t.second)}, {"partial_sum", cjson(partial)}});
    a.table.rows.push_back({std::to_string(t.n), num(t.first.real()), num(t.first.imag()), num(t.second.real()),
                            num(t.second.imag()), num(partial.real()), num(partial.imag())});
  }
  a.result = json{{"value", cjson(f.result.value)},
                  {"tail_estimate", f.result.tail_bound},
                  {"terms_used", f.result.terms_used},
                  {"terms", terms}};
  return a;
}

// "v:c0,c1,..." is c0 t^v + c1 t^{v+1} + ...
FpSeries parse_series(const std::string& name, const std::string& v, std::int64_t p) {
  auto parts = split(v, ':');
  if (parts.size() != 2) throw ParseError("--" + name + ": a series is val:c0,c1,...");
  std::int64_t val = parse_int(name, parts[0]);
  std::vector<Fp> c;
  for (const auto& x : split(parts[1], ',')) c.emplace_back(parse_int(name, x), p);
  return FpSeries(val, c);
}

std::int64_t prime_param(const Params& p) {
  std::int64_t q = p.integer("p", 5);
  if (q < 5) throw Error(ErrorKind::InvalidArgument, "--p must be a prime > 4");
  for (std::int64_t k = 2; k * k <= q; ++k)
    if (q % k == 0) throw Error(ErrorKind::InvalidArgument, "--p must be prime");
  return q;
}

Artifact tame(const JobSpec& j) {
  Params p(j);
  const std::int64_t q = prime_param(p);
  Artifact a;
  a.result = json::object();
  if (p.has("x") || p.has("y")) {
    FpSeries x = parse_series("x", p.raw("x"), q), y = parse_series("y", p.raw("y"), q);
    Fp s = tame_symbol(x, y);
    a.result["x"] = x.str();
    a.result["y"] = y.str();
    a.result["symbol"] = s.value();
    a.table.header = {"x", "y", "symbol"};
    a.table.rows.push_back({x.str(), y.str(), std::to_string(s.value())});
  }
  if (p.has("samples")) {
    const std::int64_t n = p.integer("samples", 1000);
    if (n < 1 || n > 1000000) throw Error(ErrorKind::InvalidArgument, "--samples must be in [1, 10^6]");
    auto rep = steinberg_harness(tame_symbol<Fp>, static_cast<int>(n), static_cast<std::uint64_t>(p.integer("seed", 1)), q);
    json rels = json::array();
    Table t{{"relation", "statement", "checks", "failures"}, {}};
    for (const auto& r : rep.relations) {
      rels.push_back(json{{"name", r.name}, {"statement", r.statement}, {"checks", r.checks},
                          {"failures", r.failures}, {"witnesses", r.witnesses}});
      t.rows.push_back({r.name, r.statement, std::to_string(r.checks), std::to_string(r.failures)});
    }
    a.result["harness"] = json{{"p", q}, {"samples", n}, {"all_pass", rep.all_pass()}, {"relations", rels}};
    if (a.table.rows.empty()) a.table = t;
  }
  if (a.result.empty()) throw ParseError("tame needs --x and --y, or --samples");
  return a;
}

Artifact cocycle_check(const JobSpec& j) {
  Params p(j);
  const std::int64_t q = prime_param(p);
  const std::int64_t e = p.integer("max-exp", 2), m_max = p.integer("m-max", 3), n = p.integer("samples", 200);
  if (e < 0 || e > 6 || m_max < 1 || m_max > 5 || n < 0 || n > 100000)
    throw Error(ErrorKind::InvalidArgument, "need 0 <= --max-exp <= 6, 1 <= --m-max <= 5, 0 <= --samples <= 10^5");
  Artifact a;
  a.table.header = {"check", "m", "d_rho", "checked", "failures"};
  json by_m = json::array();
  std::int64_t total = 0, bad = 0;
  for (int m = 1; m <= m_max; ++m) {
    std::int64_t c = 0, f = 0;
    for (std::int64_t u = 1; u < q; ++u)
      for (std::int64_t v = 1; v < q; ++v)
        for (std::int64_t i = -e; i <= e; ++i)
          for (std::int64_t k = -e; k <= e; ++k) {
            ++c;
            if (!torus_cocycle_check(m, Fp(u, q), Fp(v, q), i, k).equal) ++f;
          }
    by_m.push_back(json{{"m", m}, {"d_rho", sym_dynkin_index(m)}, {"checked", c}, {"failures", f}});
    a.table.rows.push_back({"torus", std::to_string(m), std::to_string(sym_dynkin_index(m)), std::to_string(c), std::to_string(f)});
    total += c;
    bad += f;
  }
  std::mt19937_64 rng(static_cast<std::uint64_t>(p.integer("seed", 1)));
  std::int64_t assoc_bad = 0;
  for (std::int64_t s = 0; s < n; ++s) {
    auto g = sample_sl2(rng, q), h = sample_sl2(rng, q), k = sample_sl2(rng, q);
    if (!(cocycle(g, h) * cocycle(mat_mul(g, h), k) == cocycle(g, mat_mul(h, k)) * cocycle(h, k))) ++assoc_bad;
  }
  a.table.rows.push_back({"associativity", "", "", std::to_string(n), std::to_string(assoc_bad)});
  auto V0 = standard_lattice<Fp>(2);
  auto hV0 = transform(sym_torus(1, Fp(1, q), 1), V0);
  a.result = json{{"p", q},
                  {"torus", json{{"checked", total}, {"failures", bad}, {"by_m", by_m}}},
                  {"associativity", json{{"samples", n}, {"failures", assoc_bad}}},
                  {"relative_dim_standard_rep", relative_dim(V0, hV0)}};
  return a;
}

Artifact dynkin(const JobSpec& j) {
  auto d = cartan_of(j);
  Artifact a;
  json fund = json::array();
  a.table.header = {"i", "dim", "index"};
  const bool computable = d.type != TypeLabel::E || d.rank == 6;
  if (computable) {
    for (int i = 1; i <= d.rank; ++i) {
      auto ch = fundamental_character(d, i);
      Rational x = dynkin_index(d, ch);
      fund.push_back(json{{"i", i}, {"dim", ch.dimension()}, {"index", rjson(x)}});
      a.table.rows.push_back({std::to_string(i), std::to_string(ch.dimension()), to_string(x)});
    }
  }
  a.result = json{{"label", d.label()}, {"fundamental", fund}, {"table_minimum", dynkin_table(d.type, d.rank)}};
  if (computable) a.result["computed_minimum"] = rjson(minimal_fundamental_index(d));
  return a;
}

Artifact dispatch(const JobSpec& j) {
  if (j.command == "roots") return roots(j);
  if (j.command == "weyl") return weyl(j);
  if (j.command == "gk") return gk(j);
  if (j.command == "constant-term") return constant_term(j);
  if (j.command == "constant-term-char") return constant_term_char_job(j);
  if (j.command == "fourier-sl2") return fourier(j);
  if (j.command == "tame") return tame(j);
  if (j.command == "cocycle-check") return cocycle_check(j);
  if (j.command == "dynkin") return dynkin(j);
  throw ParseError("unknown command '" + j.command + "'");
}

// One row per grid point of the single ranged parameter, plus |v_k - v_{k-1}|.
Artifact sweep(const JobSpec& j) {
  if (std::find(kSweepable.begin(), kSweepable.end(), j.target) == kSweepable.end())
    throw ParseError("sweep target must be one of gk, constant-term, constant-term-char, fourier-sl2");
  std::vector<std::string> ranged;
  for (const auto& [k, v] : j.params)
    if (is_range(v)) ranged.push_back(k);
  if (ranged.size() != 1)
    throw JobError("multi-range-rejected", "sweep needs exactly one ranged parameter, got " + std::to_string(ranged.size()),
                   kExitPrecondition);
  const std::string key = ranged[0];
  const auto grid = parse_range(key, j.params.at(key));
  Artifact a;
  a.table.header = {key, "value_re", "value_im", "tail_bound", "terms_used", "successive_diff"};
  json rows = json::array();
  cplx prev = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    JobSpec inner = j;
    inner.command = j.target;
    inner.target.clear();
    inner.params[key] = format_double(grid[k]);
    Artifact r = dispatch(inner);
    cplx v;
    double tail;
    std::int64_t used;
    if (j.target == "gk") {
      v = 0;
      for (const auto& c : r.result["coefficients"]) v += cplx(c["c_w"]["re"].get<double>(), c["c_w"]["im"].get<double>());
      tail = 0;
      used = r.result["count"].get<std::int64_t>();
    } else {
      v = cplx(r.result["value"]["re"].get<double>(), r.result["value"]["im"].get<double>());
      tail = r.result.contains("tail_bound") ? r.result["tail_bound"].get<double>() : r.result["tail_estimate"].get<double>();
      used = r.result["terms_used"].get<std::int64_t>();
    }
    std::string diff = k == 0 ? "" : num(std::abs(v - prev));
    a.table.rows.push_back({num(grid[k]), num(v.real()), num(v.imag()), num(tail), std::to_string(used), diff});
    json row{{key, grid[k]}, {"value", cjson(v)}, {"tail_bound", tail}, {"terms_used", used}};
    if (k > 0) row["successive_diff"] = std::abs(v - prev);
    rows.push_back(row);
    prev = v;
  }
  a.result = json{{"target", j.target}, {"parameter", key}, {"rows", rows}};
  return a;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
  err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : command_table()) out.push_back(k);
    return out;
  }();
  return c;
}

nlohmann::ordered_json JobSpec::to_json() const {
  json j{{"command", command}};
  if (!target.empty()) j["target"] = target;
  auto it = command_table().find(command == "sweep" ? target : command);
  if (it == command_table().end() || it->second.uses_type) {
    j["type"] = type;
    j["rank"] = rank;
  }
  json p = json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["flags"] = flags;
  j["output"] = output;
  return j;
}

Artifact run_job(const JobSpec& job) {
  auto it = command_table().find(job.command);
  if (it == command_table().end()) throw ParseError("unknown command '" + job.command + "'");
  const CommandInfo& info = job.command == "sweep" && command_table().count(job.target)
                                ? command_table().at(job.target)
                                : it->second;
  for (const auto& [k, v] : job.params) {
    if (std::find(info.params.begin(), info.params.end(), k) == info.params.end())
      throw ParseError("--" + k + " does not apply to " + (job.command == "sweep" ? job.target : job.command));
  }
  for (const auto& f : job.flags)
    if (std::find(info.flags.begin(), info.flags.end(), f) == info.flags.end())
      throw ParseError("--" + f + " does not apply here");
  if (job.output != "json" && job.output != "csv") throw ParseError("--output must be json or csv");
  if (job.command == "sweep") return sweep(job);
  return dispatch(job);
}

std::string render(const JobSpec& job, const Artifact& art) {
  if (job.output == "json") {
    json doc{{"schema_version", kSchemaVersion},
             {"library_version", kLibraryVersion},
             {"job", job.to_json()},
             {"result", art.result}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# " << json{{"schema_version", kSchemaVersion}, {"library_version", kLibraryVersion}, {"job", job.to_json()}}.dump()
     << "\n";
  for (std::size_t k = 0; k < art.table.header.size(); ++k) os << (k ? "," : "") << csv_field(art.table.header[k]);
  os << "\n";
  for (const auto& row : art.table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_field(row[k]);
    os << "\n";
  }
  return os.str();
}

JobSpec parse_args(int argc, const char* const* argv) {
  JobSpec job;
  CLI::App app{"Affine Eisenstein series and loop-group central extensions"};
  app.add_option("command", job.command, "roots | weyl | gk | constant-term | constant-term-char | fourier-sl2 | "
                                          "tame | cocycle-check | dynkin | sweep")
      ->required();
  app.add_option("target", job.target, "the command to sweep (sweep only)");
  app.add_option("--type", job.type, "Cartan type A..G");
  app.add_option("--rank", job.rank, "rank");
  app.add_option("--output", job.output, "json or csv");
  app.add_option("-o,--output-path", job.output_path, "artifact file (default: stdout)");
  std::map<std::string, std::string> raw;
  for (const auto& k : all_params()) app.add_option("--" + k, raw[k]);
  std::map<std::string, bool> fl;
  for (const auto& f : all_flags()) app.add_flag("--" + f, fl[f]);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }
  for (const auto& k : all_params())
    if (app.count("--" + k)) job.params[k] = raw[k];
  for (const auto& f : all_flags())
    if (fl[f]) job.flags.push_back(f);
  if (job.command != "sweep" && !job.target.empty())
    throw ParseError("unexpected positional argument '" + job.target + "'");
  return job;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobSpec job;
  try {
    job = parse_args(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << "usage: affeis_cli <command> [target] [--type T --rank N] [parameters] [--output json|csv] [-o FILE]\n"
           "commands: roots weyl gk constant-term constant-term-char fourier-sl2 tame cocycle-check dynkin sweep\n";
    return kExitOk;
  } catch (const ParseError& e) {
    write_error(err, "parse-error", e.what(), kExitParse);
    return kExitParse;
  }
  std::string text;
  try {
    text = render(job, run_job(job));
  } catch (const ParseError& e) {
    write_error(err, "parse-error", e.what(), kExitParse);
    return kExitParse;
  } catch (const JobError& e) {
    write_error(err, e.kind(), e.what(), e.code());
    return e.code();
  } catch (const Error& e) {
    int code = is_numeric_failure(e.kind()) ? kExitNumeric : kExitPrecondition;
    write_error(err, kind_name(e.kind()), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    write_error(err, "internal-error", e.what(), kExitNumeric);
    return kExitNumeric;
  }
  if (job.output_path.empty()) {
    out << text;
    return kExitOk;
  }
  // write beside the target and rename, so a failed write leaves no partial file
  const std::string tmp = job.output_path + ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << text;
    f.close();
    if (!f) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      write_error(err, "io-error", "cannot write " + job.output_path, kExitNumeric);
      return kExitNumeric;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, job.output_path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    write_error(err, "io-error", "cannot write " + job.output_path, kExitNumeric);
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace affeis::cli
