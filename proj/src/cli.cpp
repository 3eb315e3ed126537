#include "l1l2/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "l1l2/coordinate.hpp"
#include "l1l2/subspace.hpp"
#include "l1l2/tightness.hpp"

namespace l1l2::cli {
namespace {

// ---------------------------------------------------------------- input

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view token) {
  token = trim(token);
  double v = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw ParseError("not a finite number: '" + std::string(token) + "'");
  }
  return v;
}

std::vector<Vector> parse_csv(std::string_view text) {
  std::vector<Vector> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      row.push_back(parse_number(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && rows.front().size() != row.size()) {
      throw ParseError("CSV rows have different lengths");
    }
    rows.push_back(Vector::real(std::move(row)));
  }
  if (rows.empty()) throw ParseError("empty input");
  return rows;
}

double json_number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

Vector json_vector(const nlohmann::json& j, Field field) {
  if (!j.is_array() || j.empty()) throw ParseError("entries must be a nonempty array");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_array()) {
      if (field != Field::Complex) {
        throw ParseError("[re, im] pair in a real document; set \"field\": \"complex\"");
      }
      if (e.size() != 2) throw ParseError("complex entries are [re, im] pairs");
      out.emplace_back(json_number(e[0], "real part"), json_number(e[1], "imaginary part"));
    } else {
      out.emplace_back(json_number(e, "entry"), 0.0);
    }
  }
  return Vector(field, std::move(out));
}

std::vector<double> json_reals(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + " must be a nonempty array");
  std::vector<double> out;
  for (const auto& e : j) out.push_back(json_number(e, what));
  return out;
}

InputDocument parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("input document must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw ParseError("missing \"kind\"");

  InputDocument in;
  const auto field = doc.value("field", std::string("real"));
  if (field == "real") {
    in.field = Field::Real;
  } else if (field == "complex") {
    in.field = Field::Complex;
  } else {
    throw ParseError("field must be \"real\" or \"complex\"");
  }

  const auto kind = doc["kind"].get<std::string>();
  if (kind == "vector") {
    in.kind = InputKind::Vector;
    if (!doc.contains("entries")) throw ParseError("vector document needs \"entries\"");
    in.vectors.push_back(json_vector(doc["entries"], in.field));
  } else if (kind == "subspace") {
    in.kind = InputKind::Subspace;
    const auto& vs = doc.contains("vectors") ? doc["vectors"] : nlohmann::json();
    if (!vs.is_array() || vs.empty()) throw ParseError("subspace document needs \"vectors\"");
    for (const auto& v : vs) in.vectors.push_back(json_vector(v, in.field));
    for (const auto& v : in.vectors) {
      if (v.size() != in.vectors.front().size()) throw ParseError("spanning vectors differ in length");
    }
  } else if (kind == "step_function") {
    in.kind = InputKind::StepFunction;
    if (in.field != Field::Real) throw ParseError("step functions are real valued");
    if (!doc.contains("breakpoints") || !doc.contains("values")) {
      throw ParseError("step_function document needs \"breakpoints\" and \"values\"");
    }
    in.step.emplace(json_reals(doc["breakpoints"], "breakpoint"), json_reals(doc["values"], "value"));
  } else {
    throw ParseError("unknown kind '" + kind + "'");
  }
  return in;
}

// ---------------------------------------------------------------- output

Json scalar_json(const Scalar& a, Field field) {
  if (field == Field::Real) return a.real();
  return Json::array({a.real(), a.imag()});
}

Json vector_json(std::span<const Scalar> v, Field field) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(scalar_json(a, field));
  return out;
}

Json envelope(std::string_view command, const InputDocument& in) {
  Json r;
  r["command"] = command;
  r["tool_version"] = kToolVersion;
  r["input_digest"] = in.digest;
  r["field"] = to_string(in.field);
  return r;
}

Subspace subspace_of(const InputDocument& in) {
  return Subspace::from_spanning_set(in.vectors);
}

void write_value(std::string& out, const Json& j, int indent);

bool is_flat(const Json& j) {
  return std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

void newline(std::string& out, int indent) {
  out += '\n';
  out.append(static_cast<std::size_t>(indent), ' ');
}

void write_value(std::string& out, const Json& j, int indent) {
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
      } else if (is_flat(j)) {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write_value(out, j[i], indent);
        }
        out += ']';
      } else {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          newline(out, indent + 2);
          write_value(out, j[i], indent + 2);
          if (i + 1 < j.size()) out += ',';
        }
        newline(out, indent);
        out += ']';
      }
      break;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      std::size_t i = 0;
      for (const auto& [key, value] : j.items()) {
        newline(out, indent + 2);
        out += Json(key).dump();
        out += ": ";
        write_value(out, value, indent + 2);
        if (++i < j.size()) out += ',';
      }
      newline(out, indent);
      out += '}';
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) throw ParseError("empty input");
  InputDocument in = body.front() == '{' ? parse_json(body) : InputDocument{};
  if (body.front() != '{') {
    in.kind = InputKind::Vector;
    in.vectors = parse_csv(body);
    if (in.vectors.size() > 1) in.kind = InputKind::Subspace;
  }
  in.digest = "sha256:" + sha256_hex(text);
  return in;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xf];
  }
  return hex;
}

std::string render(const Json& report) {
  std::string out;
  write_value(out, report, 0);
  out += '\n';
  return out;
}

Json analyze_vector(const InputDocument& in, const Options& opt) {
  if (in.kind != InputKind::Vector || in.vectors.size() != 1) {
    throw ParseError("analyze-vector: input must be a single vector");
  }
  const Vector& x = in.vectors.front();
  const auto t = analyze(x);

  Json r = envelope("analyze-vector", in);
  Json res;
  res["n"] = t.n;
  res["l1"] = t.l1;
  res["l2"] = t.l2;
  res["c_x"] = t.c_x;
  res["c_x_deviation_form"] = tightness_constant_by_deviation(x);
  res["ratio"] = 1.0 - t.c_x / 2.0;
  res["sharp_form"] = Json{{"lhs_l1", t.l1},
                           {"rhs", (1.0 - t.c_x / 2.0) * std::sqrt(static_cast<double>(t.n)) * t.l2}};
  res["nearest_phases"] = vector_json(t.nearest.phases(), in.field);
  res["distance"] = t.distance;
  if (opt.s) {
    res["s"] = *opt.s;
    res["bound_satisfied"] = satisfies_sqrt_s_bound(x, *opt.s);
  }
  r["result"] = std::move(res);
  return r;
}

Json analyze_subspace(const InputDocument& in, const Options& opt) {
  if (in.kind == InputKind::StepFunction) throw ParseError("analyze-subspace: input must be a subspace");
  const Subspace s = subspace_of(in);

  std::optional<SubspaceBoundReport> rep;
  if (opt.mode == "exact") {
    rep.emplace(subspace_constant_exact(s));
  } else if (opt.mode == "heuristic") {
    if (opt.restarts == 0) throw Error(ErrorKind::Domain, "restarts must be at least 1");
    rep.emplace(subspace_constant_heuristic(s, opt.restarts, opt.seed));
  } else {
    throw ParseError("mode must be exact or heuristic");
  }

  Json r = envelope("analyze-subspace", in);
  if (rep->method == SearchMethod::AlternatingHeuristic) {
    r["seed"] = opt.seed;
  }
  const double sqrt_n = std::sqrt(static_cast<double>(s.ambient_dim()));
  Json res;
  res["ambient_dim"] = s.ambient_dim();
  res["dim"] = s.dim();
  res["method"] = to_string(rep->method);
  res["certified"] = rep->certified;
  if (rep->method == SearchMethod::AlternatingHeuristic) res["restarts"] = opt.restarts;
  res["c"] = rep->c;
  res["max_proj_norm"] = rep->max_proj_norm;
  res["witness_phases"] = vector_json(rep->witness.phases(), in.field);
  res["l1_bound"] = (1.0 - rep->c / 2.0) * sqrt_n;
  r["result"] = std::move(res);
  return r;
}

Json detect_coordinate(const InputDocument& in, const Options& opt) {
  if (in.kind == InputKind::StepFunction) {
    throw ParseError("detect-coordinate: input must be a subspace");
  }
  const Subspace s = subspace_of(in);
  const auto d = is_coordinate_subspace(s, opt.tol);
  const auto check = verify_sqrt_s_bound_on_subspace(s, opt.samples, opt.seed);

  Json r = envelope("detect-coordinate", in);
  r["seed"] = opt.seed;
  Json res;
  res["ambient_dim"] = s.ambient_dim();
  res["dim"] = s.dim();
  res["tol"] = opt.tol;
  res["verdict"] = d.coordinate ? "Coordinate" : "NotCoordinate";
  if (d.coordinate) {
    Json idx = Json::array();
    for (auto i : d.index_set) idx.push_back(i + 1);
    res["index_set"] = std::move(idx);
  } else {
    res["witness"] = vector_json(d.witness->entries(), in.field);
    res["witness_margin"] = d.witness_margin;
  }
  res["gram_offdiag"] = d.gram_offdiag;
  res["greedy_value"] = d.greedy_value;
  if (!d.note.empty()) res["note"] = d.note;

  Json sampling;
  sampling["samples"] = opt.samples;
  sampling["checked"] = check.checked;
  sampling["outcome"] = check.violation ? "ViolationFound" : "HoldsOnSamples";
  sampling["max_margin"] = check.margin;
  if (check.witness) sampling["witness"] = vector_json(check.witness->entries(), in.field);
  res["sampling"] = std::move(sampling);
  r["result"] = std::move(res);
  return r;
}

Json peakiness_report(const InputDocument& in, const Options& opt) {
  std::optional<StepFunction> f;
  const char* source = "step_function";
  if (in.kind == InputKind::StepFunction) {
    f = *in.step;
  } else if (in.kind == InputKind::Vector && in.vectors.size() == 1) {
    f = vector_to_step(in.vectors.front());
    source = "vector";
  } else {
    throw ParseError("peakiness: input must be a step function or a vector");
  }
  if (opt.normalize) f = f->normalized();

  const double c = peakiness(*f);
  const auto pg = parallelogram_check(*f);
  const double l1 = lp_norm(*f, 1);

  Json r = envelope("peakiness", in);
  Json res;
  res["source"] = source;
  res["cells"] = f->cells();
  res["normalized"] = opt.normalize;
  res["l1"] = l1;
  res["l2"] = lp_norm(*f, 2);
  res["c"] = c;
  res["c_from_l1"] = 2.0 - 2.0 * l1;
  res["parallelogram_lhs"] = pg.lhs;
  res["parallelogram_rhs"] = pg.rhs;
  res["parallelogram_residual"] = std::abs(pg.lhs - pg.rhs);
  r["result"] = std::move(res);
  return r;
}

// ---------------------------------------------------------------- validation

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("report invariant violated: " + what);
}

double num(const nlohmann::json& j, const char* key) {
  expect(j.contains(key) && j[key].is_number(), std::string("missing number '") + key + "'");
  return j[key].get<double>();
}

std::vector<Scalar> scalars(const nlohmann::json& arr) {
  expect(arr.is_array() && !arr.empty(), "expected a nonempty array");
  std::vector<Scalar> out;
  for (const auto& e : arr) {
    if (e.is_array()) {
      expect(e.size() == 2, "complex entry must be [re, im]");
      out.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      out.emplace_back(e.get<double>(), 0.0);
    }
  }
  return out;
}

void expect_unimodular(const std::vector<Scalar>& phases) {
  for (const auto& c : phases) {
    expect(std::abs(std::abs(c) - 1.0) <= ConstantModulusVector::kModulusTolerance,
           "phase is not unimodular");
  }
}

}  // namespace

void validate_report(const nlohmann::json& report) {
  expect(report.is_object(), "report is not an object");
  expect(report.contains("command") && report.contains("result"), "missing command/result");
  expect(report.value("tool_version", std::string()) == kToolVersion, "tool version");
  const auto command = report["command"].get<std::string>();
  const auto& r = report["result"];

  if (command == "analyze-vector") {
    const double n = num(r, "n"), l1 = num(r, "l1"), l2 = num(r, "l2"), c = num(r, "c_x");
    const double dist = num(r, "distance");
    expect(std::abs(l1 - (1.0 - c / 2.0) * std::sqrt(n) * l2) <= 1e-10 * std::max(1.0, l1),
           "l1 = (1 - c_x/2) sqrt(n) l2");
    expect(std::abs(dist * dist - c) <= 1e-10, "distance^2 = c_x");
    expect(std::abs(num(r, "c_x_deviation_form") - c) <= 1e-10, "deviation form = c_x");
    expect(c >= 0.0 && c <= 2.0 - 2.0 / std::sqrt(n) + 1e-12, "0 <= c_x <= 2 - 2/sqrt(n)");
    const auto phases = scalars(r["nearest_phases"]);
    expect(phases.size() == static_cast<std::size_t>(n), "phase count");
    expect_unimodular(phases);
  } else if (command == "analyze-subspace") {
    const double n = num(r, "ambient_dim"), c = num(r, "c"), m = num(r, "max_proj_norm");
    expect(m >= 0.0 && m <= 1.0 + 1e-12, "0 <= max_proj_norm <= 1");
    expect(std::abs(c - (2.0 - 2.0 * m)) <= 1e-12, "c = 2 - 2 max_proj_norm");
    expect(std::abs(num(r, "l1_bound") - (1.0 - c / 2.0) * std::sqrt(n)) <= 1e-12 * std::sqrt(n),
           "l1_bound = (1 - c/2) sqrt(n)");
    expect(r["certified"].get<bool>() == (r["method"].get<std::string>() == "exact"),
           "certified only for exact search");
    const auto phases = scalars(r["witness_phases"]);
    expect(phases.size() == static_cast<std::size_t>(n), "witness length");
    expect_unimodular(phases);
  } else if (command == "detect-coordinate") {
    const auto verdict = r["verdict"].get<std::string>();
    const auto dim = static_cast<std::size_t>(num(r, "dim"));
    if (verdict == "Coordinate") {
      expect(r.contains("index_set") && r["index_set"].size() == dim, "|I| = dim");
    } else {
      expect(verdict == "NotCoordinate", "unknown verdict");
      expect(r.contains("witness"), "NotCoordinate needs a witness");
      const auto w = scalars(r["witness"]);
      double l1 = 0.0, l2sq = 0.0;
      for (const auto& a : w) {
        l1 += std::abs(a);
        l2sq += std::norm(a);
      }
      const double margin = l1 - std::sqrt(static_cast<double>(dim) * l2sq);
      expect(std::abs(margin - num(r, "witness_margin")) <= 1e-12, "witness margin recomputes");
      expect(margin > 0.0, "witness violates the sqrt(s) bound");
    }
    expect(num(r, "gram_offdiag") >= 0.0, "gram_offdiag >= 0");
  } else if (command == "peakiness") {
    const double l1 = num(r, "l1"), l2 = num(r, "l2"), c = num(r, "c");
    expect(std::abs(l2 - 1.0) <= kUnitNormTolerance, "|f|_2 = 1");
    expect(std::abs(c - (2.0 - 2.0 * l1)) <= 1e-10, "c = 2 - 2 |f|_1");
    expect(c >= -1e-12 && c <= 2.0 + 1e-12, "0 <= c <= 2");
    expect(std::abs(num(r, "parallelogram_lhs") - num(r, "parallelogram_rhs")) <= 1e-10,
           "parallelogram law");
  } else {
    expect(false, "unknown command '" + command + "'");
  }
}

// ---------------------------------------------------------------- entry point

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact constants for the l1-l2 norm inequality", "l1l2"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Options opt;
  std::string input = "-";

  auto* vec = app.add_subcommand("analyze-vector", "c_x, nearest constant modulus vector, sqrt(s) test");
  vec->add_option("--input", input, "input file, '-' for stdin");
  vec->add_option("--s", opt.s, "test |x|_1 <= sqrt(s) |x|_2");

  auto* sub = app.add_subcommand("analyze-subspace", "sharp l1 constant of a subspace");
  sub->add_option("--input", input, "input file, '-' for stdin");
  sub->add_option("--mode", opt.mode, "exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  sub->add_option("--restarts", opt.restarts, "heuristic restarts");
  sub->add_option("--seed", opt.seed, "heuristic seed");

  auto* det = app.add_subcommand("detect-coordinate", "coordinate-subspace test with witness");
  det->add_option("--input", input, "input file, '-' for stdin");
  det->add_option("--tol", opt.tol, "structural tolerance");
  det->add_option("--samples", opt.samples, "random unit vectors to check");
  det->add_option("--seed", opt.seed, "sampling seed");

  auto* pk = app.add_subcommand("peakiness", "|f - 1|_2^2 for a unit-norm step function");
  pk->add_option("--input", input, "input file, '-' for stdin");
  pk->add_flag("--normalize", opt.normalize, "rescale f to unit L2 norm first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  std::string text;
  if (input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream file(input, std::ios::binary);
    if (!file) {
      err << "error: cannot read " << input << "\n";
      return kParseError;
    }
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }

  try {
    const auto doc = parse_input(text);
    Json report;
    if (vec->parsed()) {
      report = analyze_vector(doc, opt);
    } else if (sub->parsed()) {
      report = analyze_subspace(doc, opt);
    } else if (det->parsed()) {
      report = detect_coordinate(doc, opt);
    } else {
      report = peakiness_report(doc, opt);
    }
    out << render(report);
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Refusal ? kRefused : kDomainError;
  }
}

}  // namespace l1l2::cli
