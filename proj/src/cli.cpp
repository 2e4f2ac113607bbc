#include "srkit/cli.hpp"

#include "srkit/asymptotics.hpp"
#include "srkit/bounds.hpp"
#include "srkit/constructions.hpp"
#include "srkit/distributions.hpp"
#include "srkit/src_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace srk {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "srkit.v1";

enum class Format { Table, Csv, Json };

struct Common {
  std::uint32_t q = 0;
  std::string field;
  std::string format = "table";
  std::uint64_t max_enum = 0;
  unsigned threads = 1;

  FieldPtr make_field() const {
    if (!field.empty()) return Field::parse(field.rfind("q=", 0) == 0 ? field : "q=" + field);
    if (q == 0) fail(ErrorCode::BadParameters, "give --q or --field");
    return Field::create(q);
  }
  Limits limits() const {
    Limits l = Limits::defaults();
    if (max_enum) l.max_codewords = l.max_subspaces = max_enum;
    return l;
  }
  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "json") return Format::Json;
    return Format::Table;
  }
};

void add_field_opts(CLI::App* app, Common& c) {
  app->add_option("--q", c.q, "field size (prime power)");
  app->add_option("--field", c.field, "field as p^k;mod=c_k,...,c_0");
}

void add_format_opt(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"table", "csv", "json"}));
}

void add_guard_opts(CLI::App* app, Common& c) {
  app->add_option("--max-enum", c.max_enum, "enumeration guard")->check(CLI::PositiveNumber);
  app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
}

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

std::string vec_text(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string csv_vec(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

json profile_json(const Profile& p) {
  return {{"field", p.field()->to_string()}, {"profile", p.to_text()}, {"t", p.t()}, {"N", p.N()}, {"dim", p.dim()}};
}

// Runs of equal blocks are written nxmxk, which the profile parser accepts.
std::string compact_blocks(const std::vector<Block>& blocks) {
  std::string s;
  for (std::size_t i = 0; i < blocks.size();) {
    std::size_t j = i;
    while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
    if (!s.empty()) s += ',';
    s += std::to_string(blocks[i].n) + "x" + std::to_string(blocks[i].m);
    if (j - i > 1) s += "x" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string sorted_blocks(const Profile& p) { return compact_blocks(p.blocks()); }

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (w.size() <= i) w.push_back(0);
      w[i] = std::max(w[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

// ---- bounds ----

int cmd_bounds(const Common& c, const std::string& profile_text, const std::vector<std::size_t>& ds, std::ostream& out) {
  ProfilePtr p = Profile::create(c.make_field(), Profile::parse_blocks(profile_text));
  std::vector<BoundReport> reps;
  for (std::size_t d : ds) reps.push_back(bound_report(*p, d));
  if (c.fmt() == Format::Json) {
    json j = {{"schema", kSchema}, {"command", "bounds"}, {"ambient", profile_json(*p)}, {"reports", json::array()}};
    for (const auto& r : reps) {
      json e = json::array();
      for (const auto& en : r.entries) {
        json x = {{"name", en.name}, {"best", en.best}, {"note", en.note}};
        x["value"] = en.value ? big(*en.value) : json(nullptr);
        x["linear"] = en.linear ? json(*en.linear) : json(nullptr);
        e.push_back(x);
      }
      j["reports"].push_back({{"d", r.d}, {"entries", e}, {"best", r.best}, {"covering_dimension", r.covering_dimension}});
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  if (c.fmt() == Format::Csv) {
    out << "d,bound,value,linear,best\n";
    for (const auto& r : reps)
      for (const auto& en : r.entries)
        out << r.d << ',' << en.name << ',' << (en.value ? en.value->str() : "") << ','
            << (en.linear ? std::to_string(*en.linear) : "") << ',' << (en.best ? 1 : 0) << '\n';
    return 0;
  }
  out << "ambient " << compact_blocks(p->original_blocks()) << " over GF(" << p->q() << "), t=" << p->t() << ", N=" << p->N()
      << ", dim=" << p->dim() << '\n';
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"bound"};
  for (const auto& r : reps) head.push_back("d=" + std::to_string(r.d));
  rows.push_back(head);
  for (std::size_t k = 0; k < reps.front().entries.size(); ++k) {
    std::vector<std::string> row{reps.front().entries[k].name};
    for (const auto& r : reps) {
      const auto& en = r.entries[k];
      row.push_back(en.value ? en.value->str() + (en.best ? "*" : "") : "--");
    }
    rows.push_back(row);
  }
  print_table(out, rows);
  out << "\nlinear codes (largest k with q^k at most the bound)\n";
  rows.clear();
  rows.push_back(head);
  for (std::size_t k = 0; k < reps.front().entries.size(); ++k) {
    std::vector<std::string> row{reps.front().entries[k].name};
    for (const auto& r : reps) {
      const auto& en = r.entries[k];
      row.push_back(en.linear ? std::to_string(*en.linear) : "--");
    }
    rows.push_back(row);
  }
  print_table(out, rows);
  out << '\n';
  for (const auto& r : reps) {
    out << "d=" << r.d << " best: ";
    for (std::size_t i = 0; i < r.best.size(); ++i) {
      const BoundEntry* e = r.find(r.best[i]);
      out << (i ? ", " : "") << r.best[i] << '(' << e->value->str() << ')';
    }
    out << "; sphere-covering dimension " << r.covering_dimension << '\n';
  }
  return 0;
}

// ---- check ----

std::vector<std::string> attained(const LinearCode& code, std::size_t d) {
  std::vector<std::string> names;
  BoundReport r = bound_report(*code.profile(), d);
  for (const auto& e : r.entries)
    if (e.linear && *e.linear == code.dim()) names.push_back(e.name);
  return names;
}

int cmd_check(const Common& c, const std::string& path, std::ostream& out) {
  LinearCode code = read_src_file(path);
  MsrdWitness w = msrd_check(code, c.threads, c.limits());
  const Profile& p = *code.profile();
  std::vector<std::string> att;
  if (w.d && *w.d >= 1 && *w.d <= p.N()) att = attained(code, *w.d);
  std::string verdict = std::string(w.is_msrd ? "MSRD" : "not MSRD") +
                        (w.d ? ", d=" + std::to_string(*w.d) : std::string(", zero code")) + ", dim " +
                        std::to_string(code.dim());
  if (c.fmt() == Format::Json) {
    json j = {{"schema", kSchema}, {"command", "check"}, {"ambient", profile_json(p)}, {"dim", code.dim()},
              {"msrd", w.is_msrd}, {"attained", att}};
    j["d"] = w.d ? json(*w.d) : json(nullptr);
    if (w.d) j["singleton"] = {{"value", big(w.singleton_value)}, {"exponent", w.singleton_exponent}, {"j", w.j + 1}, {"delta", w.delta}};
    out << j.dump(2) << '\n';
  } else if (c.fmt() == Format::Csv) {
    out << "msrd,d,dim,singleton_exponent\n"
        << (w.is_msrd ? 1 : 0) << ',' << (w.d ? std::to_string(*w.d) : "") << ',' << code.dim() << ','
        << w.singleton_exponent << '\n';
  } else {
    out << verdict << '\n';
    out << "blocks (sorted) " << sorted_blocks(p) << " over GF(" << p.q() << ")\n";
    if (w.d) {
      out << "Singleton exponent " << w.singleton_exponent << " (j=" << w.j + 1 << ", delta=" << w.delta << ")\n";
      out << "linear bounds attained: ";
      if (att.empty()) out << "none";
      for (std::size_t i = 0; i < att.size(); ++i) out << (i ? ", " : "") << att[i];
      out << '\n';
    }
  }
  return w.is_msrd ? 0 : 1;
}

void emit_code(const LinearCode& code, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << write_src(code);
  else
    write_src_file(code, out_path);
}

// ---- distributions ----

json dist_json(const Distributions& d, bool with_support) {
  json j;
  j["sumrank"] = json::array();
  for (const auto& v : d.sumrank.counts) j["sumrank"].push_back(big(v));
  j["ranklist"] = json::array();
  for (const auto& [h, w] : d.ranklist.counts) j["ranklist"].push_back({{"ranks", h}, {"count", big(w)}});
  if (with_support) {
    j["support"] = json::array();
    for (const auto& [u, w] : d.support.counts) j["support"].push_back({{"support", u.to_string()}, {"count", big(w)}});
  }
  return j;
}

void print_dist(std::ostream& out, const Distributions& d, Format fmt, const std::string& label) {
  if (fmt == Format::Csv) {
    out << "kind,key,count\n";
    for (std::size_t r = 0; r < d.sumrank.counts.size(); ++r)
      out << "sumrank," << r << ',' << d.sumrank.counts[r] << '\n';
    for (const auto& [h, w] : d.ranklist.counts) out << "ranklist," << csv_vec(h) << ',' << w << '\n';
    for (const auto& [u, w] : d.support.counts) out << "support,\"" << u.to_string() << "\"," << w << '\n';
    return;
  }
  out << label << "sum-rank distribution\n";
  std::vector<std::vector<std::string>> rows{{"r", "W_r"}};
  for (std::size_t r = 0; r < d.sumrank.counts.size(); ++r)
    if (d.sumrank.counts[r] != 0) rows.push_back({std::to_string(r), d.sumrank.counts[r].str()});
  print_table(out, rows);
  out << '\n' << label << "rank-list distribution\n";
  rows = {{"ranks", "W"}};
  for (const auto& [h, w] : d.ranklist.counts) rows.push_back({vec_text(h), w.str()});
  print_table(out, rows);
  out << '\n' << label << "support distribution: " << d.support.counts.size() << " nonzero supports\n";
}

Distributions transformed(const Distributions& a, const LinearCode& code, const Limits& limits) {
  Distributions b;
  b.support = macwilliams_support(a.support, code.size(), code.profile(), limits);
  b.ranklist = macwilliams_ranklist(a.ranklist, code.size(), *code.profile());
  b.sumrank = sumrank_of(b.ranklist, code.profile()->N());
  return b;
}

int cmd_distributions(const Common& c, const std::string& path, bool want_dual, bool check_mw, std::ostream& out) {
  LinearCode code = read_src_file(path);
  const Limits lim = c.limits();
  Distributions a = brute_distributions(code, lim);
  std::optional<Distributions> b;
  if (want_dual || check_mw) b = transformed(a, code, lim);
  std::optional<bool> mw_ok, bm_ok;
  if (check_mw) {
    Distributions bd = brute_distributions(dual(code), lim);
    mw_ok = bd.support == b->support && bd.ranklist == b->ranklist;
    bm_ok = binomial_moment_identity(a.ranklist, bd.ranklist, code.size(), *code.profile());
  }
  const Distributions& shown = want_dual ? *b : a;
  if (c.fmt() == Format::Json) {
    json j = {{"schema", kSchema}, {"command", "distributions"}, {"ambient", profile_json(*code.profile())},
              {"dual", want_dual}, {"distributions", dist_json(shown, true)}};
    if (mw_ok) j["macwilliams_ok"] = *mw_ok;
    if (bm_ok) j["binomial_moments_ok"] = *bm_ok;
    out << j.dump(2) << '\n';
  } else {
    print_dist(out, shown, c.fmt(), want_dual ? "dual " : "");
    if (mw_ok && c.fmt() == Format::Table) {
      out << "MacWilliams transforms match the dual: " << (*mw_ok ? "yes" : "no") << '\n';
      out << "binomial moments hold: " << (*bm_ok ? "yes" : "no") << '\n';
    }
  }
  return (mw_ok && !*mw_ok) || (bm_ok && !*bm_ok) ? 1 : 0;
}

int cmd_macwilliams(const Common& c, const std::string& path, std::ostream& out) {
  LinearCode code = read_src_file(path);
  const Limits lim = c.limits();
  Distributions a = brute_distributions(code, lim);
  Distributions b = transformed(a, code, lim);
  const bool consistent = ranklist_of(b.support) == b.ranklist;
  if (c.fmt() == Format::Json) {
    json j = {{"schema", kSchema}, {"command", "macwilliams"}, {"ambient", profile_json(*code.profile())},
              {"dual", dist_json(b, true)}, {"consistent", consistent}};
    out << j.dump(2) << '\n';
  } else {
    print_dist(out, b, c.fmt(), "dual ");
    if (c.fmt() == Format::Table)
      out << "support and rank-list transforms agree: " << (consistent ? "yes" : "no") << '\n';
  }
  return consistent ? 0 : 1;
}

// ---- omega ----

int cmd_omega(const Common& c, std::size_t m, const std::vector<std::size_t>& shape, std::size_t d, bool fast_only,
              bool full_only, bool hat, std::ostream& out) {
  if (c.q == 0) fail(ErrorCode::BadParameters, "give --q");
  struct Run {
    std::string mode;
    OmegaVerdict v;
  };
  std::vector<Run> runs;
  if (!full_only) runs.push_back({"fast", hat ? omega_hat_fast(shape, m, c.q, d) : omega_fast(shape, m, c.q, d)});
  if (!fast_only) runs.push_back({"full", hat ? omega_hat_scan(shape, m, c.q, d) : omega_scan(shape, m, c.q, d)});
  bool excluded = false;
  for (const auto& r : runs) excluded = excluded || r.v.excluded;
  const std::string sym = hat ? "omega_hat" : "omega";
  if (c.fmt() == Format::Json) {
    json j = {{"schema", kSchema}, {"command", "omega"}, {"q", c.q}, {"m", m}, {"shape", shape}, {"d", d},
              {"dual", hat}, {"excluded", excluded}, {"runs", json::array()}};
    for (const auto& r : runs) {
      json x = {{"mode", r.mode}, {"excluded", r.v.excluded}, {"checked", r.v.checked}};
      x["witness"] = r.v.witness ? json(*r.v.witness) : json(nullptr);
      x["value"] = r.v.value ? big(*r.v.value) : json(nullptr);
      j["runs"].push_back(x);
    }
    out << j.dump(2) << '\n';
  } else if (c.fmt() == Format::Csv) {
    out << "mode,excluded,witness,value,checked\n";
    for (const auto& r : runs)
      out << r.mode << ',' << (r.v.excluded ? 1 : 0) << ',' << (r.v.witness ? csv_vec(*r.v.witness) : "") << ','
          << (r.v.value ? r.v.value->str() : "") << ',' << r.v.checked << '\n';
  } else {
    for (const auto& r : runs) {
      out << r.mode << ": ";
      if (r.v.excluded)
        out << "Excluded, witness " << vec_text(*r.v.witness) << ", " << sym << '=' << *r.v.value << '\n';
      else if (r.v.witness)
        out << "Inconclusive, " << sym << vec_text(*r.v.witness) << '=' << *r.v.value << '\n';
      else
        out << "Inconclusive, checked " << r.v.checked << " vectors\n";
    }
  }
  return excluded ? 1 : 0;
}

// ---- construct ----

struct ConstructArgs {
  std::string name;
  std::size_t n = 0, m = 0, d = 0, t = 0, alpha = 1, t2 = 0, a = 0, s = 0, r = 3;
  std::string profile, inner, out_path;
  bool certify = false;
};

int cmd_construct(const Common& c, const ConstructArgs& a, std::ostream& out) {
  Construction res;
  auto need = [&](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::BadParameters, std::string("construct ") + a.name + " needs " + what);
  };
  if (a.name == "simplex-lift") {
    need(c.q != 0 || !c.field.empty(), "--q");
    res = construct_simplex_lift(c.make_field()->q(), a.m ? a.m : 4, a.n ? a.n : 3, a.r);
  } else {
    FieldPtr f = c.make_field();
    if (a.name == "gabidulin") {
      need(a.n && a.m && a.d, "--n --m --d");
      res = {gabidulin_mrd(f, a.n, a.m, a.d), a.d, std::nullopt, ""};
    } else if (a.name == "mds-lift") {
      need(a.m && a.t && a.d, "--m --t --d");
      res = construct_mds_lift(f, a.m, a.t, a.d);
    } else if (a.name == "d2" || a.name == "dN" || a.name == "dN-minus") {
      need(!a.profile.empty(), "--profile");
      ProfilePtr p = Profile::create(f, Profile::parse_blocks(a.profile));
      res = a.name == "d2" ? construct_d2(p) : a.name == "dN" ? construct_dN(p) : construct_dN_minus(p, a.alpha);
    } else if (a.name == "msrd111" || a.name == "combine") {
      need(!a.inner.empty() && a.t2, "--inner --t2");
      auto inner = Profile::parse_blocks(a.inner);
      if (a.name == "msrd111") {
        res = construct_msrd111(f, inner, a.t2);
      } else {
        need(a.a, "--a");
        res = construct_combine(f, inner, a.t2, a.a);
      }
    } else if (a.name == "msrd111-ext") {
      need(a.m && a.s, "--m --s");
      res = construct_msrd111_ext(f, a.m, a.s);
    } else if (a.name == "dual-not-msrd") {
      need(a.n, "--n");
      res = construct_dual_not_msrd(f, a.n);
    } else {
      fail(ErrorCode::BadParameters, "unknown construction " + a.name);
    }
  }
  const LinearCode& code = res.code;
  std::optional<std::size_t> got;
  std::optional<bool> msrd;
  if (a.certify && code.dim() > 0) {
    MsrdWitness w = msrd_check(code, c.threads, c.limits());
    got = w.d;
    msrd = w.is_msrd;
  }
  if (c.fmt() == Format::Json) {
    json j = {{"schema", kSchema}, {"command", "construct"}, {"name", a.name}, {"ambient", profile_json(*code.profile())},
              {"dim", code.dim()}, {"designed_distance", res.distance}, {"note", res.note}};
    j["distance"] = got ? json(*got) : json(nullptr);
    j["msrd"] = msrd ? json(*msrd) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << a.name << ": " << compact_blocks(code.profile()->original_blocks()) << " over GF(" << code.profile()->q() << "), dim "
        << code.dim() << ", designed distance " << res.distance << '\n';
    if (!res.note.empty()) out << "note: " << res.note << '\n';
    if (got) out << "certified: d=" << *got << ", " << (*msrd ? "MSRD" : "not MSRD") << '\n';
  }
  if (!a.out_path.empty()) write_src_file(code, a.out_path);
  if (got && *got < res.distance) return 1;
  return 0;
}

// ---- asymptotics ----

struct AsymArgs {
  std::size_t m = 0, n = 0;
  std::vector<std::size_t> head;
  std::vector<std::string> bounds;
  std::string grid = "0:1:0.01", out_path, entropy = "exact";
  bool crossover = false;
};

int cmd_asymptotics(const Common& c, const AsymArgs& a, std::ostream& out) {
  if (c.q == 0) fail(ErrorCode::BadParameters, "give --q");
  AsymptoticScenario s;
  s.q = c.q;
  s.m_hat = a.m;
  s.tail_n = {a.n};
  s.head_m = a.head;
  s.head_n.assign(a.head.size(), 1);
  s.validate();
  const EntropyMethod method = a.entropy == "grid" ? EntropyMethod::Grid : EntropyMethod::Exact;
  auto rows = emit_series(s, a.bounds, parse_grid(a.grid), method);
  if (a.out_path.empty()) {
    write_series_csv(out, rows);
  } else {
    std::ofstream f(a.out_path);
    if (!f) fail(ErrorCode::BadParameters, "cannot write " + a.out_path);
    write_series_csv(f, rows);
  }
  if (a.crossover) {
    std::ostringstream x;
    x << std::setprecision(10) << total_distance_crossover(s, method);
    out << "# total-distance below sphere-packing from eta=" << x.str() << '\n';
  }
  return 0;
}

// ---- sphere-volume ----

int cmd_sphere_volume(const Common& c, const std::string& profile_text, std::optional<std::size_t> r, std::ostream& out) {
  ProfilePtr p = Profile::create(c.make_field(), Profile::parse_blocks(profile_text));
  auto v = sphere_volumes(*p);
  if (r && *r > p->N()) fail(ErrorCode::BadParameters, "radius exceeds N");
  std::size_t lo = r ? *r : 0, hi = r ? *r : p->N();
  if (c.fmt() == Format::Json) {
    json j = {{"schema", kSchema}, {"command", "sphere-volume"}, {"ambient", profile_json(*p)}, {"volumes", json::array()}};
    for (std::size_t i = lo; i <= hi; ++i) j["volumes"].push_back({{"r", i}, {"volume", big(v[i])}});
    out << j.dump(2) << '\n';
  } else if (c.fmt() == Format::Csv) {
    out << "r,volume\n";
    for (std::size_t i = lo; i <= hi; ++i) out << i << ',' << v[i] << '\n';
  } else {
    std::vector<std::vector<std::string>> rows{{"r", "V_r"}};
    for (std::size_t i = lo; i <= hi; ++i) rows.push_back({std::to_string(i), v[i].str()});
    print_table(out, rows);
  }
  return 0;
}

int exit_code_for(const Error& e) { return e.code() == ErrorCode::TooLarge ? 3 : 2; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-rank metric code toolkit", "srkit"};
  app.require_subcommand(1);
  Common common;
  int rc = 0;

  // bounds
  std::string profile_text;
  std::vector<std::size_t> ds;
  auto* bounds = app.add_subcommand("bounds", "bound table for a profile and distances");
  add_field_opts(bounds, common);
  add_format_opt(bounds, common);
  bounds->add_option("--profile", profile_text, "blocks, e.g. 2x2,1x2x7,1x1x5")->required();
  bounds->add_option("--d", ds, "distances")->delimiter(',')->required();

  std::string src_path, out_path;
  std::size_t block = 0;
  std::string mode = "row";

  auto* check = app.add_subcommand("check", "exact distance and MSRD test");
  check->add_option("code", src_path, "code file")->required();
  add_format_opt(check, common);
  add_guard_opts(check, common);

  auto* dualc = app.add_subcommand("dual", "dual code");
  dualc->add_option("code", src_path, "code file")->required();
  dualc->add_option("--out", out_path, "output file (stdout when absent)");

  auto* shorten_c = app.add_subcommand("shorten", "MSRD shortening on a block (blocks sorted by m, 1-based)");
  shorten_c->add_option("code", src_path, "code file")->required();
  shorten_c->add_option("--block", block, "block index")->required()->check(CLI::PositiveNumber);
  shorten_c->add_option("--mode", mode, "row or col")->check(CLI::IsMember({"row", "col"}));
  shorten_c->add_option("--out", out_path, "output file (stdout when absent)");
  add_guard_opts(shorten_c, common);

  auto* puncture_c = app.add_subcommand("puncture", "MSRD row puncturing on a block (blocks sorted by m, 1-based)");
  puncture_c->add_option("code", src_path, "code file")->required();
  puncture_c->add_option("--block", block, "block index")->required()->check(CLI::PositiveNumber);
  puncture_c->add_option("--out", out_path, "output file (stdout when absent)");
  add_guard_opts(puncture_c, common);

  bool want_dual = false, check_mw = false;
  auto* dist = app.add_subcommand("distributions", "sum-rank, rank-list and support distributions");
  dist->add_option("code", src_path, "code file")->required();
  dist->add_flag("--dual", want_dual, "distributions of the dual via MacWilliams");
  dist->add_flag("--check-macwilliams", check_mw, "compare transforms with the enumerated dual");
  add_format_opt(dist, common);
  add_guard_opts(dist, common);

  auto* mw = app.add_subcommand("macwilliams", "dual distributions via the MacWilliams transforms");
  mw->add_option("code", src_path, "code file")->required();
  add_format_opt(mw, common);
  add_guard_opts(mw, common);

  std::size_t om = 0, od = 0;
  std::vector<std::size_t> shape;
  bool fast_only = false, full_only = false, hat = false;
  auto* omega_c = app.add_subcommand("omega", "MSRD non-existence test via omega");
  omega_c->add_option("--q", common.q, "field size")->required();
  omega_c->add_option("--m", om, "columns")->required();
  omega_c->add_option("--shape", shape, "n_1,...,n_t")->delimiter(',')->required();
  omega_c->add_option("--d", od, "distance")->required();
  auto* fo = omega_c->add_flag("--fast", fast_only, "only the greedy witness");
  auto* fu = omega_c->add_flag("--full", full_only, "only the full scan");
  fo->excludes(fu);
  omega_c->add_flag("--dual", hat, "test the dual criterion");
  add_format_opt(omega_c, common);

  ConstructArgs ca;
  auto* cons = app.add_subcommand("construct", "build an optimal code");
  cons->add_option("name", ca.name,
                   "gabidulin, mds-lift, d2, dN, dN-minus, msrd111, combine, msrd111-ext, dual-not-msrd, simplex-lift")
      ->required();
  add_field_opts(cons, common);
  add_format_opt(cons, common);
  add_guard_opts(cons, common);
  cons->add_option("--n", ca.n, "rows per block");
  cons->add_option("--m", ca.m, "columns per block");
  cons->add_option("--d", ca.d, "distance");
  cons->add_option("--t", ca.t, "number of blocks");
  cons->add_option("--profile", ca.profile, "blocks for d2, dN and dN-minus");
  cons->add_option("--alpha", ca.alpha, "dN-minus builds distance N - alpha");
  cons->add_option("--inner", ca.inner, "inner blocks for msrd111 and combine");
  cons->add_option("--t2", ca.t2, "number of trailing blocks");
  cons->add_option("--a", ca.a, "combine: trailing blocks are 1 x (m_min / a)");
  cons->add_option("--s", ca.s, "msrd111-ext: s+1 blocks 1xm, distance s+2");
  cons->add_option("--r", ca.r, "simplex dimension");
  cons->add_option("--out", ca.out_path, "write the code here");
  cons->add_flag("--certify", ca.certify, "enumerate and check the distance");

  AsymArgs aa;
  auto* asym = app.add_subcommand("asymptotics", "asymptotic bound curves as CSV (sphere bounds need equal blocks)");
  asym->add_option("--q", common.q, "field size")->required();
  asym->add_option("--m", aa.m, "eventual m")->required();
  asym->add_option("--n", aa.n, "eventual n")->required();
  asym->add_option("--head", aa.head, "leading m values")->delimiter(',');
  asym->add_option("--bounds", aa.bounds, "comma separated bound names")->delimiter(',')->required();
  asym->add_option("--grid", aa.grid, "lo:hi:step");
  asym->add_option("--out", aa.out_path, "CSV file (stdout when absent)");
  asym->add_option("--entropy", aa.entropy, "exact or grid")->check(CLI::IsMember({"exact", "grid"}));
  asym->add_flag("--crossover", aa.crossover, "report where total-distance drops below sphere-packing");

  std::optional<std::size_t> radius;
  auto* sv = app.add_subcommand("sphere-volume", "sum-rank sphere volumes");
  add_field_opts(sv, common);
  add_format_opt(sv, common);
  sv->add_option("--profile", profile_text, "blocks, e.g. 3x3,2x2")->required();
  sv->add_option("--r", radius, "single radius");

  std::vector<std::string> argv_store{"srkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bounds) {
      rc = cmd_bounds(common, profile_text, ds, out);
    } else if (*check) {
      rc = cmd_check(common, src_path, out);
    } else if (*dualc) {
      emit_code(dual(read_src_file(src_path)), out_path, out);
    } else if (*shorten_c) {
      LinearCode code = read_src_file(src_path);
      LinearCode r = mode == "row" ? msrd_shorten_row(code, block - 1, common.limits())
                                   : msrd_shorten_col(code, block - 1, common.limits());
      emit_code(r, out_path, out);
    } else if (*puncture_c) {
      emit_code(msrd_puncture_row(read_src_file(src_path), block - 1, common.limits()), out_path, out);
    } else if (*dist) {
      rc = cmd_distributions(common, src_path, want_dual, check_mw, out);
    } else if (*mw) {
      rc = cmd_macwilliams(common, src_path, out);
    } else if (*omega_c) {
      rc = cmd_omega(common, om, shape, od, fast_only, full_only, hat, out);
    } else if (*cons) {
      rc = cmd_construct(common, ca, out);
    } else if (*asym) {
      rc = cmd_asymptotics(common, aa, out);
    } else if (*sv) {
      rc = cmd_sphere_volume(common, profile_text, radius, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::NotMsrd) return 1;
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}

}  // namespace srk
