#include "fb/cli.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <unistd.h>

#include "fb/error.hpp"
#include "fb/parse.hpp"

namespace fb {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- parsing

struct Item {
  std::string text;
  std::size_t column;  // 1-based column of text[0] in the source line
};

struct Line {
  std::size_t number;
  std::size_t key_column;
  Item value;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

Item trim(std::string_view s, std::size_t column) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return {std::string(s.substr(b, e - b)), column + b};
}

// Splits at `sep` outside parentheses and brackets.
std::vector<Item> split(const Item& in, char sep) {
  std::vector<Item> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= in.text.size(); ++k) {
    char c = k < in.text.size() ? in.text[k] : sep;
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(std::string_view(in.text).substr(start, k - start), in.column + start));
      start = k + 1;
    }
  }
  return out;
}

[[noreturn]] void fail(const std::string& what, std::size_t line, std::size_t column,
                       ErrorKind kind = ErrorKind::Parse) {
  throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what,
                   line, column, kind);
}

std::vector<Line> read_lines(std::string_view text, std::map<std::string, Line>& by_key) {
  static const std::vector<std::string> keys{"char", "vars", "ideal", "module", "rowdegs", "minprimes",
                                             "localmult"};
  std::vector<Line> lines;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Item whole = trim(raw, 1);
    if (whole.text.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto colon = raw.find(':');
    if (colon == std::string_view::npos) fail("expected 'key: value'", number, whole.column);
    Item key = trim(raw.substr(0, colon), 1);
    if (std::find(keys.begin(), keys.end(), key.text) == keys.end())
      fail("unknown key '" + key.text + "'", number, key.column);
    if (by_key.count(key.text)) fail("duplicate key '" + key.text + "'", number, key.column);
    Line l{number, key.column, trim(raw.substr(colon + 1), colon + 2)};
    by_key.emplace(key.text, l);
    lines.push_back(l);
    if (end == text.size()) break;
  }
  return lines;
}

const Line& required(const std::map<std::string, Line>& by_key, const std::string& key) {
  auto it = by_key.find(key);
  if (it == by_key.end()) throw ParseError("missing '" + key + ":' line", 0, 0);
  return it->second;
}

std::int64_t parse_integer(const Item& item, std::size_t line) {
  std::int64_t v = 0;
  const char* b = item.text.data();
  const char* e = b + item.text.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || item.text.empty()) fail("expected an integer", line, item.column);
  return v;
}

Polynomial parse_item(const Item& item, std::size_t line, const PrimeField& field,
                      const std::vector<std::string>& vars) {
  if (item.text.empty()) fail("empty polynomial", line, item.column);
  try {
    return parse_polynomial(item.text, field, vars, line);
  } catch (const ParseError& e) {
    std::string what = e.what();
    auto sep = what.find(": ");
    fail(sep == std::string::npos ? what : what.substr(sep + 2), line, item.column + e.column() - 1,
         e.kind());
  }
}

Polynomial parse_homogeneous(const Item& item, std::size_t line, const PrimeField& field,
                             const std::vector<std::string>& vars) {
  Polynomial f = parse_item(item, line, field, vars);
  if (!f.is_zero() && !f.is_homogeneous())
    throw Error(ErrorKind::NotHomogeneous, "line " + std::to_string(line) + ", column " +
                                               std::to_string(item.column) + ": '" + item.text +
                                               "' is not homogeneous");
  return f;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::vector<std::string> formatted(const RingPtr& ring, std::span<const Polynomial> fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(ring->format(f));
  return out;
}

[[noreturn]] void inconsistent(const std::string& what, std::size_t line) {
  throw Error(ErrorKind::InconsistentBlocks, "line " + std::to_string(line) + ": " + what);
}

// ---------------------------------------------------------------- results

json length_json(const Length& l) {
  if (l.is_finite()) return l.value();
  return "inf";
}

json polys_json(const RingPtr& ring, std::span<const Polynomial> fs) { return formatted(ring, fs); }

json estimate_json(const AsymptoticEstimate& a) {
  json levels = json::array();
  for (const auto& l : a.levels)
    levels.push_back({{"e", l.e},
                      {"q", l.q},
                      {"raw", l.raw},
                      {"normalized", format_rational(l.normalized)},
                      {"normalized_decimal", to_double(l.normalized)}});
  json diffs = json::array();
  for (const auto& d : a.differences()) diffs.push_back(format_rational(d));
  json out{{"kind", to_string(a.kind)},
           {"index", a.index},
           {"d", a.d},
           {"levels", levels},
           {"differences", diffs},
           {"stabilized", a.stabilized},
           {"limit_claimed", a.stabilized && a.d <= 1}};
  out["estimate"] = a.estimate ? json(format_rational(*a.estimate)) : json(nullptr);
  out["estimate_decimal"] = a.estimate ? json(to_double(*a.estimate)) : json(nullptr);
  return out;
}

json prime_reports_json(const RingPtr& ring, const std::vector<PrimeTorReport>& reps) {
  json out = json::array();
  for (const auto& r : reps) {
    json levels = json::array();
    for (const auto& [e, len] : r.levels) levels.push_back({{"e", e}, {"length", len}});
    out.push_back({{"prime", polys_json(ring, r.prime)},
                   {"levels", levels},
                   {"all_zero", r.all_zero},
                   {"first_nonzero", r.first_nonzero ? json(*r.first_nonzero) : json(nullptr)}});
  }
  return out;
}

json finite_pd_json(const FinitePdDecision& d) {
  return {{"finite", d.finite},
          {"cohen_macaulay", d.cohen_macaulay},
          {"rule", d.rule},
          {"betti", d.betti},
          {"certificate", d.certificate ? json(*d.certificate) : json(nullptr)}};
}

json parameter_json(const RingPtr& ring, const ParameterChoice& c) {
  return {{"y", ring->format(c.y)},
          {"n", c.n},
          {"x", ring->format(c.x)},
          {"is_parameter", c.is_parameter},
          {"kills_h0", c.kills_h0},
          {"h0_is_annihilator", c.h0_is_annihilator},
          {"kills_module", c.kills_module ? json(*c.kills_module) : json(nullptr)}};
}

MinimalResolution truncated(const MinimalResolution& res, std::size_t steps) {
  const FreeComplex& c = res.complex;
  std::vector<std::vector<Degree>> degrees;
  std::vector<Matrix> maps;
  for (std::size_t j = 0; j <= steps; ++j) degrees.push_back(c.degrees(j));
  for (std::size_t j = 1; j <= steps; ++j) maps.push_back(c.map(j));
  MinimalResolution out{FreeComplex(c.ring(), std::move(degrees), std::move(maps)), res.minimal, {}};
  out.betti.assign(res.betti.begin(), res.betti.begin() + static_cast<std::ptrdiff_t>(steps + 1));
  return out;
}

struct Context {
  const ProblemFile& problem;
  const RunFlags& flags;
  GroebnerOptions groebner;
  std::string cache_state = "unused";
  json warnings = json::array();

  SequenceOptions sequence() const {
    SequenceOptions o;
    o.emin = 1;
    o.emax = flags.emax;
    o.threads = flags.threads;
    o.groebner = groebner;
    return o;
  }

  std::optional<std::filesystem::path> cache_dir() const {
    if (flags.cache_dir) return flags.cache_dir;
    if (const char* env = std::getenv("FB_CACHE_DIR"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
  }

  MinimalResolution resolution(std::size_t steps) {
    auto dir = cache_dir();
    if (!dir) {
      cache_state = "off";
      return resolve(problem.module, steps, true, groebner);
    }
    try {
      if (auto text = cache_get(*dir, problem.digest, "resolution")) {
        auto res = deserialize_resolution(problem.ring, *text);
        if (res.complex.length() >= steps) {
          cache_state = "hit";
          return truncated(res, steps);
        }
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CacheCorrupt) throw;
      warnings.push_back(std::string("cache entry corrupt, recomputed: ") + e.what());
    }
    cache_state = "miss";
    auto res = resolve(problem.module, steps, true, groebner);
    try {
      cache_put(*dir, problem.digest, "resolution", serialize_resolution(res));
    } catch (const std::exception& e) {
      warnings.push_back(std::string("cache write failed: ") + e.what());
    }
    return res;
  }
};

json run_resolve(Context& ctx) {
  const auto& pb = ctx.problem;
  std::size_t steps = ctx.flags.steps.value_or(3);
  auto res = ctx.resolution(steps);
  const FreeComplex& c = res.complex;
  json degrees = json::array(), maps = json::array(), syz = json::array();
  for (std::size_t j = 0; j <= steps; ++j) degrees.push_back(c.degrees(j));
  for (std::size_t j = 1; j <= steps; ++j) {
    const Matrix& m = c.map(j);
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(pb.ring->format(m.column(k)[r]));
      rows.push_back(row);
    }
    maps.push_back({{"index", j}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}});
  }
  for (std::size_t j = 0; j <= steps; ++j) {
    auto s = syzygy(pb.module, res, j);
    syz.push_back({{"index", j}, {"length", length_json(s.length)}, {"dimension", s.dimension}});
  }
  return {{"steps", steps}, {"betti", res.betti}, {"minimal", res.minimal},
          {"degrees", degrees}, {"maps", maps},       {"syzygies", syz}};
}

void require_exact_hypotheses(const ProblemFile& pb) {
  if (pb.ring->dimension() != 1)
    throw Error(ErrorKind::WrongDimension,
                "the exact test needs dim R = 1, got " + std::to_string(pb.ring->dimension()));
  if (!pb.module.length().is_finite())
    throw Error(ErrorKind::InfiniteLength, "the exact test needs a module of finite length");
}

json run_beta(Context& ctx) {
  const auto& pb = ctx.problem;
  std::size_t i = ctx.flags.idx.value_or(0);
  if (!ctx.flags.exact) return estimate_json(beta_sequence(pb.module, i, ctx.sequence()));
  require_exact_hypotheses(pb);
  auto res = ctx.resolution(i + 1);
  auto h0 = h0_ring(pb.ring, ctx.groebner);
  return {{"index", i},
          {"vanishes", entries_in_h0(res, i, h0)},
          {"rule", "image_in_local_cohomology"},
          {"h0", polys_json(pb.ring, h0)}};
}

json run_diagnose(Context& ctx) {
  const auto& pb = ctx.problem;
  std::size_t i = ctx.flags.idx.value_or(1);
  require_exact_hypotheses(pb);
  auto rep = diagnose(pb.module, i, pb.minprimes, ctx.sequence());
  auto choice = choose_parameter(pb.ring, &pb.module, ctx.flags.seed, ctx.groebner);
  auto xi = xi_alternating_sum_check(pb.module, i, ctx.flags.seed, ctx.groebner);
  auto lemma = lemma_h0_check(pb.module, i, ctx.groebner);
  json xi_json{{"applicable", xi.applicable},
               {"reason", xi.reason},
               {"tor", xi.tor},
               {"syzygy_length", xi.syzygy_length},
               {"alternating_sum", xi.alternating_sum},
               {"holds", xi.holds}};
  return {{"index", i},
          {"condition_i", rep.condition_i},
          {"rule", "image_in_local_cohomology"},
          {"condition_iii", prime_reports_json(pb.ring, rep.condition_iii)},
          {"beta_estimate", estimate_json(rep.beta_estimate)},
          {"consistent", rep.consistent},
          {"finite_pd", rep.finite_pd ? finite_pd_json(*rep.finite_pd) : json(nullptr)},
          {"h0", polys_json(pb.ring, h0_ring(pb.ring, ctx.groebner))},
          {"buchsbaum", to_string(buchsbaum_flag(pb.ring, ctx.groebner))},
          {"parameter", parameter_json(pb.ring, choice)},
          {"alternating_sum", xi_json},
          {"lemma_h0",
           {{"status", to_string(lemma.status)},
            {"tor_length", lemma.tor_length ? json(*lemma.tor_length) : json(nullptr)}}}};
}

json run_syz(Context& ctx) {
  const auto& pb = ctx.problem;
  auto rep = syzygy_length_survey(pb.module, ctx.flags.steps.value_or(3), ctx.groebner);
  json rows = json::array(), checks = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"index", r.index}, {"betti", r.betti}, {"dimension", r.dimension},
                    {"length", length_json(r.length)}});
  for (const auto& c : rep.checks)
    checks.push_back({{"law", c.law}, {"index", c.index}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {{"i_max", rep.rows.size() - 1},
          {"ring_dimension", rep.ring_dimension},
          {"module_length", length_json(rep.module_length)},
          {"rows", rows},
          {"checks", checks},
          {"no_violations", rep.no_violations()}};
}

json run_verify(Context& ctx) {
  const auto& pb = ctx.problem;
  LawOptions opts;
  opts.max_index = ctx.flags.idx.value_or(1);
  opts.sequence = ctx.sequence();
  if (pb.minprimes && pb.localmult) {
    opts.additivity = true;
    std::vector<PrimeData> primes;
    for (std::size_t k = 0; k < pb.minprimes->size(); ++k)
      primes.push_back({(*pb.minprimes)[k], (*pb.localmult)[k]});
    opts.primes = std::move(primes);
  } else if (pb.minprimes) {
    ctx.warnings.push_back("minprimes given without localmult: additivity not checked");
  }
  auto report = verify_laws(pb.module, opts);
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"law", c.law},
                      {"index", c.index},
                      {"lhs", format_rational(c.lhs)},
                      {"rhs", format_rational(c.rhs)},
                      {"exact", c.exact},
                      {"passed", c.passed}});

  // homology lengths of the first twisted complex against the degreewise oracle
  json oracle = json::array();
  auto res = ctx.resolution(opts.max_index + 1);
  auto twisted = twist_complex(res.complex, BracketLevel(pb.ring->characteristic(), 1));
  bool agree = true;
  for (std::size_t i = 0; i <= opts.max_index; ++i) {
    auto h = homology_length(twisted, i, ctx.groebner);
    auto o = degreewise_homology_oracle(twisted, i, ctx.flags.degree_bound);
    bool same = h.is_finite() && h.value() == o.value;
    agree = agree && same;
    oracle.push_back({{"index", i},
                      {"e", 1},
                      {"homology", length_json(h)},
                      {"oracle", o.value},
                      {"stabilized", o.stabilized},
                      {"bound", o.bound},
                      {"agree", same}});
  }
  return {{"checks", checks}, {"all_passed", report.all_passed()}, {"oracle", oracle}, {"oracle_agrees", agree}};
}

json ring_json(const ProblemFile& pb) {
  return {{"characteristic", pb.ring->characteristic()},
          {"vars", pb.ring->vars()},
          {"ideal", polys_json(pb.ring, pb.ring->ideal_generators())},
          {"dimension", pb.ring->dimension()}};
}

}  // namespace

// ---------------------------------------------------------------- problem files

ProblemFile parse_problem(std::string_view text) {
  std::map<std::string, Line> by_key;
  read_lines(text, by_key);

  const Line& ch = required(by_key, "char");
  std::int64_t p = parse_integer(ch.value, ch.number);
  if (p < 2) fail("characteristic must be a prime", ch.number, ch.value.column);

  const Line& vl = required(by_key, "vars");
  std::vector<std::string> vars;
  for (const auto& item : split(vl.value, ',')) {
    if (!is_identifier(item.text)) fail("invalid variable name '" + item.text + "'", vl.number, item.column);
    vars.push_back(item.text);
  }
  RingPtr poly_ring = QuotientRing::make(static_cast<std::uint64_t>(p), vars,
                                         std::span<const std::string>());
  const PrimeField& field = poly_ring->field();

  const Line& il = required(by_key, "ideal");
  std::vector<Polynomial> ideal;
  if (!il.value.text.empty())
    for (const auto& item : split(il.value, ','))
      ideal.push_back(parse_homogeneous(item, il.number, field, vars));
  RingPtr ring = QuotientRing::make(field, vars, ideal);

  const Line& ml = required(by_key, "module");
  std::string kind;
  std::vector<std::vector<Polynomial>> rows;
  std::vector<std::string> module_text;
  {
    const std::string& v = ml.value.text;
    auto sp = v.find_first_of(" \t[");
    kind = v.substr(0, sp);
    Item rest = trim(sp == std::string::npos ? std::string_view() : std::string_view(v).substr(sp),
                     ml.value.column + (sp == std::string::npos ? v.size() : sp));
    if (kind == "coker") {
      if (rest.text.size() < 2 || rest.text.front() != '[' || rest.text.back() != ']')
        fail("expected a matrix in brackets", ml.number, rest.column);
      Item inner = trim(std::string_view(rest.text).substr(1, rest.text.size() - 2), rest.column + 1);
      if (inner.text.empty()) fail("empty matrix", ml.number, rest.column);
      std::vector<std::string> row_text;
      for (const auto& row_item : split(inner, ';')) {
        std::vector<Polynomial> row;
        for (const auto& e : split(row_item, ',')) row.push_back(parse_homogeneous(e, ml.number, field, vars));
        if (!rows.empty() && row.size() != rows.front().size())
          fail("matrix rows have different lengths", ml.number, row_item.column);
        row_text.push_back(join(formatted(ring, row), ", "));
        rows.push_back(std::move(row));
      }
      module_text.push_back("coker [" + join(row_text, "; ") + "]");
    } else if (kind == "quotient") {
      std::vector<Polynomial> gens;
      if (!rest.text.empty())
        for (const auto& e : split(rest, ',')) gens.push_back(parse_homogeneous(e, ml.number, field, vars));
      module_text.push_back(rest.text.empty() ? "quotient" : "quotient " + join(formatted(ring, gens), ", "));
      rows.push_back(std::move(gens));
    } else {
      fail("module must be 'coker [...]' or 'quotient ...'", ml.number, ml.value.column);
    }
  }

  std::vector<Degree> row_degrees(rows.size(), 0);
  if (auto it = by_key.find("rowdegs"); it != by_key.end()) {
    row_degrees.clear();
    for (const auto& item : split(it->second.value, ','))
      row_degrees.push_back(static_cast<Degree>(parse_integer(item, it->second.number)));
    if (row_degrees.size() != rows.size())
      inconsistent("rowdegs has " + std::to_string(row_degrees.size()) + " entries for " +
                       std::to_string(rows.size()) + " module rows",
                   it->second.number);
  }
  Matrix presentation = [&] {
    try {
      return Matrix::from_rows(field, vars.size(), rows, row_degrees);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotHomogeneous) throw;
      throw Error(ErrorKind::NotHomogeneous,
                  "line " + std::to_string(ml.number) + ": matrix column is not homogeneous for the row degrees");
    }
  }();

  std::optional<std::vector<std::vector<Polynomial>>> minprimes;
  std::vector<std::string> prime_text;
  if (auto it = by_key.find("minprimes"); it != by_key.end()) {
    const Line& l = it->second;
    minprimes.emplace();
    for (const auto& item : split(l.value, ';')) {
      if (item.text.size() < 2 || item.text.front() != '(' || item.text.back() != ')')
        fail("expected a parenthesized generator list", l.number, item.column);
      Item inner = trim(std::string_view(item.text).substr(1, item.text.size() - 2), item.column + 1);
      std::vector<Polynomial> gens;
      if (!inner.text.empty())
        for (const auto& g : split(inner, ',')) gens.push_back(parse_homogeneous(g, l.number, field, vars));
      prime_text.push_back("(" + join(formatted(ring, gens), ", ") + ")");
      minprimes->push_back(std::move(gens));
    }
  }
  std::optional<std::vector<std::uint64_t>> localmult;
  if (auto it = by_key.find("localmult"); it != by_key.end()) {
    const Line& l = it->second;
    localmult.emplace();
    for (const auto& item : split(l.value, ',')) {
      auto v = parse_integer(item, l.number);
      if (v < 1) fail("multiplicities are positive", l.number, item.column);
      localmult->push_back(static_cast<std::uint64_t>(v));
    }
    if (!minprimes) inconsistent("localmult given without minprimes", l.number);
    if (localmult->size() != minprimes->size())
      inconsistent("localmult has " + std::to_string(localmult->size()) + " entries for " +
                       std::to_string(minprimes->size()) + " minimal primes",
                   l.number);
  }

  std::ostringstream canon;
  canon << "char: " << p << "\n";
  canon << "vars: " << join(vars, ", ") << "\n";
  canon << "ideal: " << join(formatted(ring, ideal), ", ") << "\n";
  canon << "module: " << module_text.front() << "\n";
  std::vector<std::string> degs;
  for (Degree d : row_degrees) degs.push_back(std::to_string(d));
  canon << "rowdegs: " << join(degs, ", ") << "\n";
  if (minprimes) canon << "minprimes: " << join(prime_text, "; ") << "\n";
  if (localmult) {
    std::vector<std::string> ms;
    for (auto m : *localmult) ms.push_back(std::to_string(m));
    canon << "localmult: " << join(ms, ", ") << "\n";
  }

  ProblemFile pb{ring,
                 kind,
                 SubmodulePresentation::cokernel(ring, std::move(presentation)),
                 std::move(minprimes),
                 std::move(localmult),
                 canon.str(),
                 ""};
  pb.digest = sha256_hex(pb.canonical);
  return pb;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::Io, "SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

// ---------------------------------------------------------------- dispatch

nlohmann::json run(const std::string& command, const ProblemFile& problem, const RunFlags& flags) {
  auto start = std::chrono::steady_clock::now();
  Context ctx{problem, flags, GroebnerOptions{flags.max_gb_size}};
  json result;
  if (command == "resolve") result = run_resolve(ctx);
  else if (command == "hk") {
    auto m = problem.ring->variables();
    result = estimate_json(hk_sequence(problem.ring, m, ctx.sequence()));
  } else if (command == "beta") result = run_beta(ctx);
  else if (command == "mu") result = estimate_json(mu_sequence(problem.module, flags.idx.value_or(0), ctx.sequence()));
  else if (command == "diagnose1") result = run_diagnose(ctx);
  else if (command == "syz") result = run_syz(ctx);
  else if (command == "verify") result = run_verify(ctx);
  else throw Error(ErrorKind::Parse, "unknown command '" + command + "'");
  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  return {{"version", kReportVersion},
          {"command", command},
          {"input_digest", problem.digest},
          {"ring", ring_json(problem)},
          {"result", result},
          {"timing", {{"elapsed_ms", elapsed.count()}, {"cache", ctx.cache_state}}},
          {"warnings", ctx.warnings}};
}

std::optional<std::string> csv_table(const nlohmann::json& result) {
  if (!result.is_object() || !result.contains("levels")) return std::nullopt;
  std::string out = "e,q,raw,normalized\n";
  for (const auto& l : result["levels"])
    out += std::to_string(l["e"].get<unsigned>()) + "," + std::to_string(l["q"].get<std::uint64_t>()) + "," +
           std::to_string(l["raw"].get<std::uint64_t>()) + "," + l["normalized"].get<std::string>() + "\n";
  return out;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownVariable:
    case ErrorKind::NotPrime:
    case ErrorKind::NotHomogeneous:
    case ErrorKind::UnitIdeal:
    case ErrorKind::InconsistentBlocks:
      return 2;
    case ErrorKind::WrongDimension:
    case ErrorKind::InfiniteLength:
    case ErrorKind::NotPrimary:
    case ErrorKind::NotMonomial:
    case ErrorKind::MissingMultiplicities:
    case ErrorKind::NoParameterFound:
    case ErrorKind::ZeroDivisorQuery:
      return 3;
    case ErrorKind::ResourceBound:
    case ErrorKind::Overflow:
      return 4;
    default:
      return 1;
  }
}

// ---------------------------------------------------------------- cache

namespace {

constexpr const char* kCacheMagic = "fb-cache 1";

std::filesystem::path entry_path(const std::filesystem::path& dir, const std::string& digest,
                                 const std::string& kind) {
  return dir / digest / (kind + ".dat");
}

[[noreturn]] void corrupt(const std::filesystem::path& path, const std::string& why) {
  throw Error(ErrorKind::CacheCorrupt, path.string() + ": " + why);
}

}  // namespace

std::optional<std::string> cache_get(const std::filesystem::path& dir, const std::string& digest,
                                     const std::string& kind) {
  auto path = entry_path(dir, digest, kind);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string magic, kind_line, digest_line, sum_line, size_line;
  if (!std::getline(in, magic) || !std::getline(in, kind_line) || !std::getline(in, digest_line) ||
      !std::getline(in, sum_line) || !std::getline(in, size_line))
    corrupt(path, "truncated header");
  if (magic != kCacheMagic) corrupt(path, "unknown format version");
  if (kind_line != "kind " + kind) corrupt(path, "kind mismatch");
  if (digest_line != "digest " + digest) corrupt(path, "digest mismatch");
  if (sum_line.rfind("sha256 ", 0) != 0 || size_line.rfind("bytes ", 0) != 0) corrupt(path, "bad header");
  std::size_t size = 0;
  try {
    size = std::stoull(size_line.substr(6));
  } catch (const std::exception&) {
    corrupt(path, "bad size");
  }
  std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (payload.size() != size) corrupt(path, "size mismatch");
  if (sha256_hex(payload) != sum_line.substr(7)) corrupt(path, "checksum mismatch");
  return payload;
}

void cache_put(const std::filesystem::path& dir, const std::string& digest, const std::string& kind,
               const std::string& payload) {
  auto path = entry_path(dir, digest, kind);
  std::filesystem::create_directories(path.parent_path());
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    out << kCacheMagic << "\n"
        << "kind " << kind << "\n"
        << "digest " << digest << "\n"
        << "sha256 " << sha256_hex(payload) << "\n"
        << "bytes " << payload.size() << "\n"
        << payload;
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string serialize_resolution(const MinimalResolution& res) {
  const FreeComplex& c = res.complex;
  const RingPtr& ring = c.ring();
  json degrees = json::array(), maps = json::array();
  for (std::size_t j = 0; j <= c.length(); ++j) degrees.push_back(c.degrees(j));
  for (std::size_t j = 1; j <= c.length(); ++j) {
    json cols = json::array();
    for (const auto& col : c.map(j).columns()) {
      json entries = json::array();
      for (std::size_t r = 0; r < col.rank(); ++r) entries.push_back(ring->format(col[r]));
      cols.push_back(entries);
    }
    maps.push_back(cols);
  }
  return json{{"minimal", res.minimal}, {"degrees", degrees}, {"maps", maps}}.dump();
}

MinimalResolution deserialize_resolution(const RingPtr& ring, std::string_view text) {
  try {
    json j = json::parse(text);
    auto degrees = j.at("degrees").get<std::vector<std::vector<Degree>>>();
    const auto& maps_json = j.at("maps");
    if (degrees.size() != maps_json.size() + 1) throw Error(ErrorKind::CacheCorrupt, "shape mismatch");
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < maps_json.size(); ++k) {
      std::vector<ModuleElement> cols;
      for (const auto& cj : maps_json[k]) {
        ModuleElement col(ring->field(), ring->nvars(), degrees[k].size());
        if (cj.size() != degrees[k].size()) throw Error(ErrorKind::CacheCorrupt, "column size mismatch");
        for (std::size_t r = 0; r < cj.size(); ++r) col[r] = ring->parse(cj[r].get<std::string>());
        cols.push_back(std::move(col));
      }
      maps.emplace_back(ring->field(), ring->nvars(), degrees[k], degrees[k + 1], std::move(cols));
    }
    MinimalResolution res{FreeComplex(ring, degrees, std::move(maps)), j.at("minimal").get<bool>(), {}};
    for (const auto& d : degrees) res.betti.push_back(d.size());
    return res;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CacheCorrupt) throw;
    throw Error(ErrorKind::CacheCorrupt, std::string("unreadable resolution: ") + e.what());
  } catch (const std::exception& e) {
    throw Error(ErrorKind::CacheCorrupt, std::string("unreadable resolution: ") + e.what());
  }
}

}  // namespace fb
