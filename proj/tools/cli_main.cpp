// Command-line front end: exact Todd power series of 2D lattice cones,
// generalized Dedekind sums, and zeta values of real quadratic
// irrationalities, with cross-route verification and benchmarking.
//
// Exit codes: 0 success, 1 a checked mathematical identity failed (a minimal
// failing witness is printed), 2 usage error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toddzeta/bseq.hpp"
#include "toddzeta/cone2d.hpp"
#include "toddzeta/dedekind.hpp"
#include "toddzeta/oracle.hpp"
#include "toddzeta/quadfield.hpp"
#include "toddzeta/toddseries.hpp"
#include "toddzeta/zetavalues.hpp"

namespace {

using json = nlohmann::json;
using toddzeta::BSeq;
using toddzeta::QuadForm;
using toddzeta::cone2d::Cone2D;
using toddzeta::exactmath::Int;
using toddzeta::exactmath::Rat;
using toddzeta::exactmath::to_string;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Run configuration. Every run is reproducible from this serialized form:
// json output embeds it, table/csv output sends it to stderr.

struct RunConfig {
  std::string subcommand;
  std::string format = "table";  // table | json | csv
  int jobs = 1;
  json params = json::object();

  json to_json() const {
    return json{{"subcommand", subcommand},
                {"format", format},
                {"jobs", jobs},
                {"params", params}};
  }
};

int default_jobs() {
  const char* env = std::getenv("TODDZETA_JOBS");
  if (env == nullptr) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

// Keeps the CLI value when the flag was given, else the config-file value,
// else the built-in default.
void merge_key(json& params, const std::string& key, bool flag_given,
               const json& cli_value, const json& fallback) {
  if (flag_given)
    params[key] = cli_value;
  else if (!params.contains(key))
    params[key] = fallback;
}

void emit(const RunConfig& cfg, const json& results,
          const std::vector<std::string>& table_lines,
          const std::vector<std::string>& csv_lines) {
  if (cfg.format == "json") {
    json out{{"config", cfg.to_json()}, {"results", results}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  const std::vector<std::string>& lines =
      cfg.format == "csv" ? csv_lines : table_lines;
  for (const std::string& line : lines) std::cout << line << "\n";
  std::cerr << "config: " << cfg.to_json().dump() << "\n";
}

Int parse_bigint(const std::string& text, const std::string& flag) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": '" + text + "' is not an integer");
  }
}

// Runs fn(0..n-1) on `jobs` threads; rethrows the first worker exception.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int width = std::min<int>(jobs, static_cast<int>(n));
  pool.reserve(static_cast<std::size_t>(width));
  for (int t = 0; t < width; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

json series_to_json(const toddzeta::exactmath::BiSeries& s) {
  json terms = json::array();
  for (const auto& [ij, c] : s.terms())
    terms.push_back(json{{"i", ij.first}, {"j", ij.second},
                         {"c", to_string(c)}});
  return json{{"text", s.str()}, {"terms", terms}};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// todd

int run_todd(const RunConfig& cfg) {
  namespace ts = toddzeta::toddseries;
  Int q = parse_bigint(cfg.params.at("q").get<std::string>(), "-q");
  if (q < 1) throw UsageError("-q: need q >= 1");
  Int p_raw = parse_bigint(cfg.params.at("p").get<std::string>(), "-p");
  Int p = toddzeta::exactmath::mod_floor(p_raw, q);
  int degree = cfg.params.at("degree").get<int>();
  if (degree < 0) throw UsageError("--degree: need a degree >= 0");
  std::string method = cfg.params.at("method").get<std::string>();

  std::vector<std::string> table;
  std::vector<std::string> csv;
  json res{{"p", to_string(p)}, {"q", to_string(q)},
           {"degree", degree}, {"method", method}};
  int code = 0;

  auto csv_series = [&csv](const toddzeta::exactmath::BiSeries& s) {
    csv.push_back("i,j,coefficient");
    for (const auto& [ij, c] : s.terms())
      csv.push_back(std::to_string(ij.first) + "," +
                    std::to_string(ij.second) + "," + to_string(c));
  };

  if (method == "cf" || method == "ppd") {
    ts::ToddSeries t = method == "cf" ? ts::todd_cf(p, q, degree)
                                      : ts::todd_ppd(p, q, degree);
    table.push_back(t.series.str());
    csv_series(t.series);
    res["series"] = series_to_json(t.series);
  } else if (method == "cyclotomic") {
    ts::CyclotomicTodd c = ts::todd_cyclotomic(p, q, degree);
    std::ostringstream line;
    json terms = json::array();
    csv.push_back("i,j,coefficient");
    bool first = true;
    for (int d = 0; d <= degree; ++d)
      for (int i = d; i >= 0; --i) {
        double v = c.coeff_at(i, d - i);
        if (std::fabs(v) < 1e-12) continue;
        if (!first) line << " + ";
        first = false;
        line << format_double(v);
        if (i > 0) line << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
        if (d - i > 0)
          line << "*y" << (d - i > 1 ? "^" + std::to_string(d - i) : "");
        terms.push_back(json{{"i", i}, {"j", d - i}, {"c", v}});
        csv.push_back(std::to_string(i) + "," + std::to_string(d - i) + "," +
                      format_double(v));
      }
    table.push_back(line.str());
    table.push_back("max imaginary residue = " +
                    format_double(c.max_imag_abs));
    res["series"] = json{{"terms", terms},
                         {"max_imag_abs", c.max_imag_abs}};
  } else if (method == "all") {
    ts::ToddSeries a = ts::todd_cf(p, q, degree);
    ts::ToddSeries b = ts::todd_ppd(p, q, degree);
    ts::CyclotomicTodd c = ts::todd_cyclotomic(p, q, degree);
    bool exact_agree = a.series == b.series;
    double max_diff = 0.0;
    for (int d = 0; d <= degree; ++d)
      for (int i = 0; i <= d; ++i) {
        double diff = std::fabs(
            c.coeff_at(i, d - i) -
            toddzeta::exactmath::to_double(a.series.coeff(i, d - i)));
        max_diff = std::max(max_diff, diff);
      }
    bool cyclo_agree = max_diff <= 1e-9;
    table.push_back(a.series.str());
    table.push_back(std::string("cf == ppd: ") +
                    (exact_agree ? "exact" : "MISMATCH"));
    table.push_back("cyclotomic max abs diff = " + format_double(max_diff) +
                    (cyclo_agree ? " (tolerance 1e-09)"
                                 : " EXCEEDS tolerance 1e-09"));
    if (exact_agree && cyclo_agree) {
      table.push_back("all methods agree");
    } else {
      if (!exact_agree) {
        // locate the first mismatching coefficient as the witness
        for (int d = 0; d <= degree && exact_agree == false; ++d)
          for (int i = d; i >= 0; --i)
            if (a.series.coeff(i, d - i) != b.series.coeff(i, d - i)) {
              table.push_back("witness: coefficient of x^" +
                              std::to_string(i) + "*y^" +
                              std::to_string(d - i) + ": cf " +
                              to_string(a.series.coeff(i, d - i)) +
                              " != ppd " +
                              to_string(b.series.coeff(i, d - i)));
              d = degree + 1;
              break;
            }
      }
      code = 1;
    }
    csv_series(a.series);
    csv.push_back("agreement," +
                  std::string(exact_agree && cyclo_agree ? "yes" : "no"));
    res["series"] = series_to_json(a.series);
    res["agreement"] = json{{"cf_ppd_exact", exact_agree},
                            {"cyclotomic_max_abs_diff", max_diff},
                            {"agree", exact_agree && cyclo_agree}};
  } else {
    throw UsageError("--method: expected cf, ppd, cyclotomic or all");
  }

  emit(cfg, res, table, csv);
  return code;
}

// ---------------------------------------------------------------------------
// dedekind

int run_dedekind(const RunConfig& cfg) {
  namespace dd = toddzeta::dedekind;
  int i = cfg.params.at("i").get<int>();
  int j = cfg.params.at("j").get<int>();
  Int p = parse_bigint(cfg.params.at("p").get<std::string>(), "-p");
  Int q = parse_bigint(cfg.params.at("q").get<std::string>(), "-q");
  std::string method = cfg.params.at("method").get<std::string>();
  if (method != "direct" && method != "todd" && method != "both")
    throw UsageError("--method: expected direct, todd or both");
  if (method != "direct" && (i < 1 || j < 1))
    throw UsageError("the continued-fraction bridge needs i >= 1 and j >= 1");

  std::vector<std::string> table;
  std::vector<std::string> csv;
  json res{{"i", i}, {"j", j}, {"p", to_string(p)}, {"q", to_string(q)},
           {"method", method}};
  int code = 0;

  auto csv_row = [&](const std::string& m, const Rat& v) {
    csv.push_back(std::to_string(i) + "," + std::to_string(j) + "," +
                  to_string(p) + "," + to_string(q) + "," + m + "," +
                  to_string(v));
  };
  csv.push_back("i,j,p,q,method,value");

  if (method == "both") {
    Rat direct = dd::dedekind_direct(i, j, p, q);
    Rat bridged = dd::dedekind_via_todd(i, j, p, q);
    table.push_back(to_string(direct));
    if (direct == bridged) {
      table.push_back("direct == via-todd: exact");
    } else {
      table.push_back("witness: s_{" + std::to_string(i) + "," +
                      std::to_string(j) + "}(" + to_string(p) + "," +
                      to_string(q) + "): direct " + to_string(direct) +
                      " != via-todd " + to_string(bridged));
      code = 1;
    }
    csv_row("direct", direct);
    csv_row("todd", bridged);
    res["value_direct"] = to_string(direct);
    res["value_via_todd"] = to_string(bridged);
    res["agree"] = direct == bridged;
  } else {
    Rat v = method == "direct" ? dd::dedekind_direct(i, j, p, q)
                               : dd::dedekind_via_todd(i, j, p, q);
    table.push_back(to_string(v));
    csv_row(method, v);
    res["value"] = to_string(v);
  }

  emit(cfg, res, table, csv);
  return code;
}

// ---------------------------------------------------------------------------
// zeta

int run_zeta(const RunConfig& cfg) {
  namespace zv = toddzeta::zetavalues;
  namespace qf = toddzeta::quadfield;
  BSeq b = BSeq::parse(cfg.params.at("b").get<std::string>());
  int n = cfg.params.at("n").get<int>();
  if (n < 0) throw UsageError("-n: need n >= 0");
  std::string route = cfg.params.at("route").get<std::string>();

  std::vector<std::string> table;
  std::vector<std::string> csv;
  json res{{"b", b.str()}, {"n", n}, {"route", route}};
  int code = 0;
  csv.push_back("b,n,route,value");
  auto csv_row = [&](const std::string& r, const Rat& v) {
    csv.push_back("\"" + b.str() + "\"," + std::to_string(n) + "," + r + "," +
                  to_string(v));
  };

  if (route == "field") {
    Rat v = zv::zeta_field(b, n);
    table.push_back(to_string(v));
    csv_row(route, v);
    res["value"] = to_string(v);
  } else if (route == "general" || route == "all") {
    qf::QuadFieldData data = qf::build_quadfield(b);
    Cone2D tau = qf::tau_cone(data);
    QuadForm qb = qf::q_b_form(data);
    Rat general_cf =
        zv::zeta_general(tau, qb, n, toddzeta::dedekind::ToddMethod::cf);
    if (route == "general") {
      table.push_back(to_string(general_cf));
      csv_row(route, general_cf);
      res["value"] = to_string(general_cf);
    } else {
      Rat field = zv::zeta_field(b, n);
      Rat general_ppd =
          zv::zeta_general(tau, qb, n, toddzeta::dedekind::ToddMethod::ppd);
      if (field == general_cf && field == general_ppd) {
        table.push_back(to_string(field));
        table.push_back("all routes agree");
      } else {
        table.push_back("witness: b=" + b.str() + ", n=" + std::to_string(n) +
                        ": field " + to_string(field) + ", general(cf) " +
                        to_string(general_cf) + ", general(ppd) " +
                        to_string(general_ppd));
        code = 1;
      }
      csv_row("field", field);
      csv_row("general-cf", general_cf);
      csv_row("general-ppd", general_ppd);
      res["value_field"] = to_string(field);
      res["value_general_cf"] = to_string(general_cf);
      res["value_general_ppd"] = to_string(general_ppd);
      res["agree"] = code == 0;
    }
  } else {
    throw UsageError("--route: expected field, general or all");
  }

  emit(cfg, res, table, csv);
  return code;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteOutcome {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_witness;
};

// Runs `task(k)` for k over a grid, collecting pass/fail in input order so
// the reported witness is the minimal one regardless of thread scheduling.
template <typename Task>
SuiteOutcome run_grid(const std::string& name, std::size_t count, int jobs,
                      Task task) {
  std::vector<std::string> witness(count);
  std::vector<char> bad(count, 0);
  parallel_for(count, jobs, [&](std::size_t k) {
    std::string w = task(k);
    if (!w.empty()) {
      witness[k] = w;
      bad[k] = 1;
    }
  });
  SuiteOutcome out;
  out.name = name;
  out.checked = count;
  for (std::size_t k = 0; k < count; ++k)
    if (bad[k]) {
      ++out.failed;
      if (out.first_witness.empty()) out.first_witness = witness[k];
    }
  return out;
}

SuiteOutcome suite_reciprocity(long qmax, int degree, int jobs) {
  namespace ts = toddzeta::toddseries;
  std::vector<std::pair<long, long>> pairs;
  for (long q = 1; q <= qmax; ++q)
    for (long p = 1; p <= q; ++p)
      if (std::gcd(p, q) == 1) pairs.push_back({p, q});
  return run_grid("reciprocity", pairs.size(), jobs, [&](std::size_t k) {
    auto [p, q] = pairs[k];
    ts::IdentityReport rep = ts::check_reciprocity(Int(p), Int(q), degree);
    if (rep.ok) return std::string();
    return "(p=" + std::to_string(p) + ", q=" + std::to_string(q) +
           ", degree=" + std::to_string(degree) + "): " + rep.detail;
  });
}

SuiteOutcome suite_evenodd(long qmax, int degree, int jobs) {
  namespace ts = toddzeta::toddseries;
  std::vector<std::pair<long, long>> pairs;
  for (long q = 1; q <= qmax; ++q)
    for (long p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1) pairs.push_back({p, q});
  return run_grid("even-odd split", pairs.size(), jobs, [&](std::size_t k) {
    auto [p, q] = pairs[k];
    ts::IdentityReport rep =
        ts::check_even_odd_identity(Int(p), Int(q), degree);
    if (rep.ok) return std::string();
    return "(p=" + std::to_string(p) + ", q=" + std::to_string(q) +
           ", degree=" + std::to_string(degree) + "): " + rep.detail;
  });
}

SuiteOutcome suite_bridge(long qmax, int order_max, int jobs) {
  namespace dd = toddzeta::dedekind;
  struct Item {
    long p, q;
    int i, j;
  };
  std::vector<Item> items;
  for (long q = 1; q <= qmax; ++q)
    for (long p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (int i = 1; i < order_max; ++i)
        for (int j = 1; i + j <= order_max; ++j)
          items.push_back({p, q, i, j});
    }
  return run_grid("dedekind bridge", items.size(), jobs, [&](std::size_t k) {
    const Item& it = items[k];
    Rat direct = dd::dedekind_direct(it.i, it.j, Int(it.p), Int(it.q));
    Rat bridged = dd::dedekind_via_todd(it.i, it.j, Int(it.p), Int(it.q));
    if (direct == bridged) return std::string();
    return "s_{" + std::to_string(it.i) + "," + std::to_string(it.j) + "}(" +
           std::to_string(it.p) + "," + std::to_string(it.q) + "): direct " +
           to_string(direct) + " != via-todd " + to_string(bridged);
  });
}

SuiteOutcome suite_classical(long qmax, int jobs) {
  namespace dd = toddzeta::dedekind;
  std::vector<std::pair<long, long>> pairs;
  for (long q = 2; q <= qmax; ++q)
    for (long p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) pairs.push_back({p, q});
  return run_grid("classical reciprocity", pairs.size(), jobs,
                  [&](std::size_t k) {
    auto [p, q] = pairs[k];
    Rat lhs = dd::classical_dedekind(Int(p), Int(q)) +
              dd::classical_dedekind(Int(q), Int(p));
    Rat rhs = toddzeta::exactmath::make_rat(-1, 4) +
              toddzeta::exactmath::make_rat(p * p + q * q + 1, 12 * p * q);
    if (lhs == rhs) return std::string();
    return "(p=" + std::to_string(p) + ", q=" + std::to_string(q) +
           "): s(p,q)+s(q,p) = " + to_string(lhs) + " != " + to_string(rhs);
  });
}

// All b-sequences with r entries in [2, entry_max], excluding all-2.
void enumerate_bseqs(int r, long entry_max, std::vector<BSeq>& out) {
  std::vector<long> cur(static_cast<std::size_t>(r), 2);
  for (;;) {
    bool all_two = true;
    for (long v : cur)
      if (v != 2) all_two = false;
    if (!all_two) {
      std::vector<Int> entries(cur.begin(), cur.end());
      out.push_back(BSeq(std::move(entries)));
    }
    int pos = r - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == entry_max) {
      cur[static_cast<std::size_t>(pos)] = 2;
      --pos;
    }
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
  }
}

SuiteOutcome suite_routes(int rmax, long entry_max, int nmax, int jobs) {
  namespace zv = toddzeta::zetavalues;
  namespace qf = toddzeta::quadfield;
  std::vector<BSeq> bs;
  for (int r = 1; r <= rmax; ++r) enumerate_bseqs(r, entry_max, bs);
  std::vector<std::pair<std::size_t, int>> grid;
  for (std::size_t k = 0; k < bs.size(); ++k)
    for (int n = 0; n <= nmax; ++n) grid.push_back({k, n});
  return run_grid("zeta routes", grid.size(), jobs, [&](std::size_t g) {
    const BSeq& b = bs[grid[g].first];
    int n = grid[g].second;
    qf::QuadFieldData data = qf::build_quadfield(b);
    Cone2D tau = qf::tau_cone(data);
    QuadForm qb = qf::q_b_form(data);
    Rat field = zv::zeta_field(b, n);
    Rat gen_cf =
        zv::zeta_general(tau, qb, n, toddzeta::dedekind::ToddMethod::cf);
    Rat gen_ppd =
        zv::zeta_general(tau, qb, n, toddzeta::dedekind::ToddMethod::ppd);
    std::string where = "(b=" + b.str() + ", n=" + std::to_string(n) + ")";
    if (field != gen_cf || field != gen_ppd)
      return where + ": field " + to_string(field) + ", general(cf) " +
             to_string(gen_cf) + ", general(ppd) " + to_string(gen_ppd);
    if (zv::error_term(b, n) != 0)
      return where + ": error term " + to_string(zv::error_term(b, n)) +
             " != 0";
    for (int s = 1; s < b.r(); ++s)
      if (zv::zeta_field(b.rotated(s), n) != field)
        return where + ": rotation by " + std::to_string(s) + " gives " +
               to_string(zv::zeta_field(b.rotated(s), n));
    return std::string();
  });
}

int run_verify(const RunConfig& cfg) {
  std::string suite = cfg.params.at("suite").get<std::string>();
  long qmax = cfg.params.at("qmax").get<long>();
  int degree = cfg.params.at("degree").get<int>();
  int order_max = cfg.params.at("order_max").get<int>();
  int nmax = cfg.params.at("nmax").get<int>();
  int rmax = cfg.params.at("rmax").get<int>();
  long entry_max = cfg.params.at("entry_max").get<long>();
  if (qmax < 1) throw UsageError("--qmax: need qmax >= 1");
  if (degree < 0) throw UsageError("--degree: need a degree >= 0");

  std::vector<std::string> known = {"reciprocity", "evenodd", "bridge",
                                    "classical", "routes"};
  std::vector<std::string> chosen;
  if (suite == "all")
    chosen = known;
  else if (std::find(known.begin(), known.end(), suite) != known.end())
    chosen = {suite};
  else
    throw UsageError("--suite: expected one of all, reciprocity, evenodd, "
                     "bridge, classical, routes");

  std::vector<SuiteOutcome> outcomes;
  for (const std::string& s : chosen) {
    if (s == "reciprocity")
      outcomes.push_back(suite_reciprocity(qmax, degree, cfg.jobs));
    else if (s == "evenodd")
      outcomes.push_back(suite_evenodd(qmax, degree, cfg.jobs));
    else if (s == "bridge")
      outcomes.push_back(suite_bridge(qmax, order_max, cfg.jobs));
    else if (s == "classical")
      outcomes.push_back(suite_classical(qmax, cfg.jobs));
    else
      outcomes.push_back(suite_routes(rmax, entry_max, nmax, cfg.jobs));
  }

  std::vector<std::string> table;
  std::vector<std::string> csv;
  csv.push_back("suite,checked,failed");
  json suites = json::array();
  bool ok = true;
  for (const SuiteOutcome& o : outcomes) {
    if (o.failed == 0) {
      table.push_back(o.name + ": " + std::to_string(o.checked) +
                      " checks, all hold");
    } else {
      table.push_back(o.name + ": " + std::to_string(o.checked) + " checks, " +
                      std::to_string(o.failed) +
                      " FAILED; first witness: " + o.first_witness);
      ok = false;
    }
    csv.push_back(o.name + "," + std::to_string(o.checked) + "," +
                  std::to_string(o.failed));
    json jo{{"name", o.name}, {"checked", o.checked}, {"failed", o.failed}};
    if (o.failed > 0) jo["first_witness"] = o.first_witness;
    suites.push_back(jo);
  }
  emit(cfg, json{{"suites", suites}, {"ok", ok}}, table, csv);
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench

int run_bench(const RunConfig& cfg) {
  namespace dd = toddzeta::dedekind;
  std::vector<long long> sizes =
      cfg.params.at("sizes").get<std::vector<long long>>();
  unsigned long long seed = cfg.params.at("seed").get<unsigned long long>();
  int trials = cfg.params.at("trials").get<int>();
  if (trials < 1) throw UsageError("--trials: need trials >= 1");
  for (long long q : sizes)
    if (q < 3) throw UsageError("--sizes: every q must be >= 3");

  std::mt19937_64 rng(seed);
  auto time_ms = [&](auto&& fn) {
    double best = 0.0;
    for (int t = 0; t < trials; ++t) {
      auto start = std::chrono::steady_clock::now();
      fn();
      auto stop = std::chrono::steady_clock::now();
      double ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      if (t == 0 || ms < best) best = ms;
    }
    return best;
  };

  std::vector<std::string> table;
  std::vector<std::string> csv;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%10s %10s %12s %14s %9s %6s", "q", "p",
                "direct_ms", "via_todd_ms", "speedup", "agree");
  table.push_back(buf);
  csv.push_back("q,p,t_direct_ms,t_via_todd_ms,speedup,agree");
  json rows = json::array();
  bool all_agree = true;

  for (long long q : sizes) {
    std::uniform_int_distribution<long long> pick(1, q - 1);
    long long p = pick(rng);
    while (std::gcd(p, q) != 1) p = pick(rng);
    Int P(static_cast<long>(p));
    Int Q(static_cast<long>(q));
    Rat direct, bridged;
    double t_direct = time_ms([&] { direct = dd::dedekind_direct(1, 1, P, Q); });
    double t_todd = time_ms([&] { bridged = dd::dedekind_via_todd(1, 1, P, Q); });
    bool agree = direct == bridged;
    all_agree = all_agree && agree;
    double speedup = t_todd > 0 ? t_direct / t_todd : 0.0;
    std::snprintf(buf, sizeof(buf), "%10lld %10lld %12.3f %14.3f %9.1f %6s",
                  q, p, t_direct, t_todd, speedup, agree ? "yes" : "NO");
    table.push_back(buf);
    csv.push_back(std::to_string(q) + "," + std::to_string(p) + "," +
                  format_double(t_direct) + "," + format_double(t_todd) +
                  "," + format_double(speedup) + "," +
                  (agree ? "yes" : "no"));
    rows.push_back(json{{"q", q},
                        {"p", p},
                        {"t_direct_ms", t_direct},
                        {"t_via_todd_ms", t_todd},
                        {"agree", agree}});
    if (!agree)
      table.push_back("witness: s_{1,1}(" + std::to_string(p) + "," +
                      std::to_string(q) + "): direct " + to_string(direct) +
                      " != via-todd " + to_string(bridged));
  }
  emit(cfg,
       json{{"rows", rows},
            {"note", "timings vary between runs; values are exact"}},
       table, csv);
  return all_agree ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{"Exact Todd power series of 2D lattice cones, generalized "
               "Dedekind sums, and zeta values of real quadratic "
               "irrationalities at nonpositive integers."};
  app.require_subcommand(0, 1);

  std::string format = "table";
  int jobs = default_jobs();
  std::string config_path;
  auto* opt_format =
      app.add_option("-f,--format", format, "output format")
          ->check(CLI::IsMember({"table", "json", "csv"}));
  auto* opt_jobs = app.add_option(
      "--jobs", jobs, "worker threads for grid subcommands (default from "
                      "TODDZETA_JOBS, else 1)");
  app.add_option("--config", config_path,
                 "JSON run-configuration file; explicit flags override it");

  // todd
  auto* todd = app.add_subcommand(
      "todd", "Todd power series of the cone of type (p, q)");
  todd->fallthrough();
  std::string t_p = "0", t_q = "1", t_method = "cf";
  int t_degree = 6;
  auto* opt_tp = todd->add_option("-p", t_p, "type numerator (taken mod q)");
  auto* opt_tq = todd->add_option("-q", t_q, "type denominator, q >= 1");
  auto* opt_td = todd->add_option("-d,--degree", t_degree,
                                  "truncation total degree");
  auto* opt_tm = todd->add_option(
      "-m,--method", t_method, "cf | ppd | cyclotomic | all");

  // dedekind
  auto* dede = app.add_subcommand(
      "dedekind", "generalized Dedekind sum s_{i,j}(p, q)");
  dede->fallthrough();
  int d_i = 1, d_j = 1;
  std::string d_p = "1", d_q = "1", d_method = "direct";
  auto* opt_di = dede->add_option("-i", d_i, "first Bernoulli order, i >= 0");
  auto* opt_dj = dede->add_option("-j", d_j, "second Bernoulli order, j >= 0");
  auto* opt_dp = dede->add_option("-p", d_p, "any integer coprime to q");
  auto* opt_dq = dede->add_option("-q", d_q, "modulus, q >= 1");
  auto* opt_dm =
      dede->add_option("-m,--method", d_method, "direct | todd | both");

  // zeta
  auto* zeta = app.add_subcommand(
      "zeta", "zeta value at -n for the periodic sequence b");
  zeta->fallthrough();
  std::string z_b = "2,3", z_route = "field";
  int z_n = 0;
  auto* opt_zb = zeta->add_option(
      "-b", z_b, "comma-separated entries, each >= 2, not all 2");
  auto* opt_zn = zeta->add_option("-n", z_n, "evaluation point -n, n >= 0");
  auto* opt_zr =
      zeta->add_option("-r,--route", z_route, "field | general | all");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "exact identity sweeps; exit 0 iff every identity holds");
  verify->fallthrough();
  std::string v_suite = "all";
  long v_qmax = 50;
  int v_degree = 6, v_order_max = 4, v_nmax = 2, v_rmax = 3;
  long v_entry_max = 4;
  auto* opt_vs = verify->add_option(
      "-s,--suite", v_suite,
      "all | reciprocity | evenodd | bridge | classical | routes");
  auto* opt_vq = verify->add_option("--qmax", v_qmax, "largest modulus");
  auto* opt_vd =
      verify->add_option("--degree", v_degree, "series degree for identities");
  auto* opt_vo = verify->add_option("--order-max", v_order_max,
                                    "largest i+j in the bridge suite");
  auto* opt_vn =
      verify->add_option("--nmax", v_nmax, "largest n in the routes suite");
  auto* opt_vr =
      verify->add_option("--rmax", v_rmax, "longest b in the routes suite");
  auto* opt_ve = verify->add_option("--entry-max", v_entry_max,
                                    "largest b entry in the routes suite");

  // bench
  auto* bench = app.add_subcommand(
      "bench", "O(q) direct sum vs O(log q) bridge timing table");
  bench->fallthrough();
  std::vector<long long> b_sizes = {1000, 10000, 100000, 832040};
  unsigned long long b_seed = 20240501;
  int b_trials = 3;
  auto* opt_bs = bench->add_option("--sizes", b_sizes,
                                   "moduli q to time (comma separated)")
                     ->delimiter(',');
  auto* opt_bseed =
      bench->add_option("--seed", b_seed, "seed for the random coprime p");
  auto* opt_bt = bench->add_option("--trials", b_trials,
                                   "repetitions; the fastest is reported");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    json file_cfg = json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("--config: cannot open '" + config_path + "'");
      try {
        in >> file_cfg;
      } catch (const json::parse_error& e) {
        throw UsageError("--config: invalid JSON: " + std::string(e.what()));
      }
      if (!file_cfg.is_object())
        throw UsageError("--config: top level must be an object");
    }

    std::string sub;
    if (todd->parsed())
      sub = "todd";
    else if (dede->parsed())
      sub = "dedekind";
    else if (zeta->parsed())
      sub = "zeta";
    else if (verify->parsed())
      sub = "verify";
    else if (bench->parsed())
      sub = "bench";
    else if (file_cfg.contains("subcommand"))
      sub = file_cfg.at("subcommand").get<std::string>();
    else
      throw UsageError("no subcommand given (todd, dedekind, zeta, verify, "
                       "bench); see --help");
    if (file_cfg.contains("subcommand") &&
        file_cfg.at("subcommand").get<std::string>() != sub)
      throw UsageError("--config: file is for subcommand '" +
                       file_cfg.at("subcommand").get<std::string>() +
                       "', but '" + sub + "' was requested");

    RunConfig cfg;
    cfg.subcommand = sub;
    cfg.format = opt_format->count() > 0
                     ? format
                     : file_cfg.value("format", format);
    cfg.jobs = opt_jobs->count() > 0 ? jobs : file_cfg.value("jobs", jobs);
    if (cfg.jobs < 1) throw UsageError("--jobs: need jobs >= 1");
    cfg.params = file_cfg.value("params", json::object());
    if (!cfg.params.is_object())
      throw UsageError("--config: 'params' must be an object");

    if (sub == "todd") {
      merge_key(cfg.params, "p", opt_tp->count() > 0, t_p, t_p);
      merge_key(cfg.params, "q", opt_tq->count() > 0, t_q, t_q);
      merge_key(cfg.params, "degree", opt_td->count() > 0, t_degree, t_degree);
      merge_key(cfg.params, "method", opt_tm->count() > 0, t_method, t_method);
      return run_todd(cfg);
    }
    if (sub == "dedekind") {
      merge_key(cfg.params, "i", opt_di->count() > 0, d_i, d_i);
      merge_key(cfg.params, "j", opt_dj->count() > 0, d_j, d_j);
      merge_key(cfg.params, "p", opt_dp->count() > 0, d_p, d_p);
      merge_key(cfg.params, "q", opt_dq->count() > 0, d_q, d_q);
      merge_key(cfg.params, "method", opt_dm->count() > 0, d_method, d_method);
      return run_dedekind(cfg);
    }
    if (sub == "zeta") {
      merge_key(cfg.params, "b", opt_zb->count() > 0, z_b, z_b);
      merge_key(cfg.params, "n", opt_zn->count() > 0, z_n, z_n);
      merge_key(cfg.params, "route", opt_zr->count() > 0, z_route, z_route);
      return run_zeta(cfg);
    }
    if (sub == "verify") {
      merge_key(cfg.params, "suite", opt_vs->count() > 0, v_suite, v_suite);
      merge_key(cfg.params, "qmax", opt_vq->count() > 0, v_qmax, v_qmax);
      merge_key(cfg.params, "degree", opt_vd->count() > 0, v_degree, v_degree);
      merge_key(cfg.params, "order_max", opt_vo->count() > 0, v_order_max,
                v_order_max);
      merge_key(cfg.params, "nmax", opt_vn->count() > 0, v_nmax, v_nmax);
      merge_key(cfg.params, "rmax", opt_vr->count() > 0, v_rmax, v_rmax);
      merge_key(cfg.params, "entry_max", opt_ve->count() > 0, v_entry_max,
                v_entry_max);
      return run_verify(cfg);
    }
    merge_key(cfg.params, "sizes", opt_bs->count() > 0, b_sizes, b_sizes);
    merge_key(cfg.params, "seed", opt_bseed->count() > 0, b_seed, b_seed);
    merge_key(cfg.params, "trials", opt_bt->count() > 0, b_trials, b_trials);
    return run_bench(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
