// scatterlab: build catalog members, compute invariants, run distinguishability
// matrices, render SVG and run the acceptance self-test.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
// Every error is reported on stderr as one JSON object.

#include "scatterlab/acceptance.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/json_io.hpp"
#include "scatterlab/render.hpp"
#include "scatterlab/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

using namespace scatterlab;

namespace {

struct Exit {
  int code;
};

[[noreturn]] void die(int code, std::string_view kind, const std::string& message) {
  Json j{{"error", std::string(kind)}, {"message", message}};
  std::cerr << j.dump() << "\n";
  throw Exit{code};
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::usage:
    case ErrorKind::validation:
    case ErrorKind::range:
    case ErrorKind::parse:
    case ErrorKind::dimension_mismatch: return 2;
    default: return 1;
  }
}

std::set<int> parse_set(const std::string& text) {
  std::set<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.insert(v);
    } catch (const std::exception&) {
      fail(ErrorKind::usage, "not an integer list: '" + text + "'");
    }
  }
  return out;
}

// "1011" or "1,0,1,1".
std::vector<int> parse_bits(const std::string& text) {
  std::vector<int> out;
  for (char c : text) {
    if (c == ',') continue;
    if (c != '0' && c != '1') fail(ErrorKind::usage, "bits must be 0/1: '" + text + "'");
    out.push_back(c - '0');
  }
  return out;
}

// "a..b"
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) fail(ErrorKind::usage, "expected a range lo..hi, got '" + text + "'");
  auto lo = parse_set(text.substr(0, dots)), hi = parse_set(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1 || *lo.begin() > *hi.begin())
    fail(ErrorKind::usage, "bad range '" + text + "'");
  return {*lo.begin(), *hi.begin()};
}

std::string set_label(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

struct Options {
  std::string family, set, bits, u = "2", all_subsets, subsets_of, invariant, format, out, input, expect;
  std::vector<std::string> members;
  std::optional<int> n, depth, k_max, bits_count, criterion;
  std::string delta = "1/1000";
};

int default_depth() {
  const char* env = std::getenv("SCATTERLAB_DEPTH_DEFAULT");
  if (!env || !*env) return 6;
  try {
    size_t used = 0;
    int d = std::stoi(env, &used);
    if (used == std::strlen(env) && d >= 1) return d;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::usage, "SCATTERLAB_DEPTH_DEFAULT must be a positive integer");
}

FamilySpec spec_from(const Options& o) {
  FamilySpec s;
  s.id = parse_family(o.family);
  s.S = parse_set(o.set);
  s.bits = parse_bits(o.bits);
  if (o.n) s.n = *o.n;
  s.u = Rat::parse(o.u);
  s.depth = o.depth.value_or(default_depth());
  s.label = o.family;
  return s;
}

InvariantOptions invariant_options(const Options& o) {
  InvariantOptions io;
  io.depth = o.depth.value_or(default_depth());
  if (o.k_max) io.k_max = *o.k_max;
  io.delta = Rat::parse(o.delta);
  io.bits_count = o.bits_count;
  if (!io.bits_count && !o.bits.empty()) io.bits_count = static_cast<int>(parse_bits(o.bits).size());
  return io;
}

std::string read_input(const std::string& input) {
  if (input == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  auto first = input.find_first_not_of(" \t\n");
  if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) return input;
  std::ifstream f(input);
  if (!f) fail(ErrorKind::usage, "cannot read input '" + input + "'");
  return {std::istreambuf_iterator<char>(f), {}};
}

// The subject of invariant/render: an input document, or a family build.
Built subject(const Options& o) {
  if (!o.input.empty()) {
    Json j;
    try {
      j = Json::parse(read_input(o.input));
    } catch (const Json::parse_error& e) {
      fail(ErrorKind::parse, e.what());
    }
    return built_from_json(j);
  }
  if (o.family.empty()) fail(ErrorKind::usage, "give an input document or --family");
  return build(spec_from(o));
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) fail(ErrorKind::usage, "cannot write '" + o.out + "'");
  f << text;
}

std::string default_invariant(FamilyId id) {
  switch (id) {
    case FamilyId::kn: return "order_type";
    case FamilyId::xs: return "recover_S_linear";
    case FamilyId::xs_cubes: return "recover_S_cubes";
    case FamilyId::frames_zs:
    case FamilyId::frame: return "holes";
    case FamilyId::ys_prop3: return "chain_sizes";
    case FamilyId::ug: return "bits_profile";
    case FamilyId::ys_td:
    case FamilyId::discrete: return "signature";
    case FamilyId::as_primes: return "cluster_profile";
    case FamilyId::xu: return "cb_profile";
  }
  return "signature";
}

std::vector<FamilySpec> members_from(const Options& o) {
  FamilySpec base = spec_from(o);
  std::vector<FamilySpec> out;
  auto add_set = [&](const std::set<int>& S) {
    FamilySpec m = base;
    m.S = S;
    m.label = set_label(S);
    out.push_back(m);
  };
  if (!o.all_subsets.empty()) {
    auto [lo, hi] = parse_range(o.all_subsets);
    if (hi - lo >= 12) fail(ErrorKind::usage, "--all-subsets range is too wide");
    for (auto& S : nonempty_subsets(lo, hi)) add_set(S);
  }
  if (!o.subsets_of.empty()) {
    std::vector<int> pool;
    for (int v : parse_set(o.subsets_of)) pool.push_back(v);
    if (pool.size() > 12) fail(ErrorKind::usage, "--subsets-of list is too long");
    for (auto& idx : nonempty_subsets(0, static_cast<int>(pool.size()) - 1)) {
      std::set<int> S;
      for (int i : idx) S.insert(pool[static_cast<size_t>(i)]);
      add_set(S);
    }
  }
  for (auto& text : o.members) {
    FamilySpec m = base;
    m.label = text;
    if (base.id == FamilyId::ug) {
      m.bits = parse_bits(text);
    } else if (base.id == FamilyId::kn || base.id == FamilyId::frame) {
      auto v = parse_set(text);
      if (v.size() != 1) fail(ErrorKind::usage, "member '" + text + "' must be one integer");
      m.n = *v.begin();
    } else {
      m.S = parse_set(text);
      m.label = set_label(m.S);
    }
    out.push_back(m);
  }
  if (out.size() < 2) fail(ErrorKind::usage, "distinguish needs at least two members");
  for (auto& m : out) validate_spec(m);
  return out;
}

int cmd_build(const Options& o) {
  if (o.family.empty()) fail(ErrorKind::usage, "build needs --family");
  Built b = build(spec_from(o));
  if (o.format == "svg")
    emit(o, render_svg(b, o.depth.value_or(default_depth())));
  else
    emit(o, dump(to_json(b)));
  return 0;
}

int cmd_invariant(const Options& o) {
  if (o.invariant.empty()) fail(ErrorKind::usage, "invariant needs --name");
  Json v = compute_invariant(subject(o), o.invariant, invariant_options(o));
  emit(o, dump(Json{{"invariant", o.invariant}, {"value", v}}));
  if (!o.expect.empty()) {
    Json want;
    try {
      want = Json::parse(o.expect);
    } catch (const Json::parse_error& e) {
      fail(ErrorKind::parse, e.what());
    }
    if (want != v) die(1, "invariant_mismatch", "expected " + want.dump() + ", got " + v.dump());
  }
  return 0;
}

int cmd_distinguish(const Options& o) {
  if (o.family.empty()) fail(ErrorKind::usage, "distinguish needs --family");
  FamilyId id = parse_family(o.family);
  std::string inv = o.invariant.empty() ? default_invariant(id) : o.invariant;
  auto report = distinguish_matrix(id, members_from(o), inv, invariant_options(o));
  emit(o, dump(to_json(report)));
  if (!report.all_distinct()) die(1, "not_all_distinct", "some member pairs are not distinguished");
  return 0;
}

int cmd_render(const Options& o) {
  if (!o.format.empty() && o.format != "svg") fail(ErrorKind::usage, "render only writes svg");
  emit(o, render_svg(subject(o), o.depth.value_or(default_depth())));
  return 0;
}

int cmd_selftest(const Options& o) {
  std::vector<int> ids;
  if (o.criterion) {
    ids.push_back(*o.criterion);
  } else {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  bool all = true;
  std::string text;
  Json rows = Json::array();
  for (int id : ids) {
    auto r = run_criterion(id);
    all = all && r.passed;
    text += format_line(r) + "\n";
    rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (id == 10) text += corrected_signature_line() + "\n";
  }
  emit(o, o.format == "json" ? dump(Json{{"criteria", rows}, {"all_passed", all}}) : text);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattered sets, their derivatives and the invariants that tell them apart"};
  app.require_subcommand(1);
  Options o;

  auto family_flags = [&](CLI::App* c) {
    c->add_option("--family", o.family, "Family id");
    c->add_option("--set", o.set, "Parameter set S, e.g. 1,3");
    c->add_option("--bits", o.bits, "Bit list, e.g. 1011");
    c->add_option("-n,--n,--dimension", o.n, "Family index, frame size or dimension");
    c->add_option("--u", o.u, "Growth factor for xu");
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--depth", o.depth, "Working depth (default: SCATTERLAB_DEPTH_DEFAULT or 6)");
    c->add_option("--out", o.out, "Output path (default: stdout)");
  };
  auto invariant_flags = [&](CLI::App* c) {
    c->add_option("--name,--invariant", o.invariant, "Invariant name");
    c->add_option("--k-max", o.k_max, "Derivative horizon");
    c->add_option("--delta", o.delta, "Cluster threshold");
    c->add_option("--bits-count", o.bits_count, "Bits to read for bits_profile");
  };

  auto* b = app.add_subcommand("build", "Emit a catalog member as JSON (or SVG)");
  family_flags(b);
  common(b);
  b->add_option("--format", o.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));

  auto* inv = app.add_subcommand("invariant", "Compute an invariant of a document or family member");
  family_flags(inv);
  common(inv);
  invariant_flags(inv);
  inv->add_option("--expect", o.expect, "Expected JSON value; a mismatch exits 1");
  inv->add_option("input", o.input, "Path, inline JSON or - for stdin");

  auto* d = app.add_subcommand("distinguish", "Pairwise distinguishability matrix");
  family_flags(d);
  common(d);
  invariant_flags(d);
  d->add_option("--all-subsets", o.all_subsets, "Members S over all nonempty subsets of lo..hi");
  d->add_option("--subsets-of", o.subsets_of, "Members S over all nonempty subsets of a list");
  d->add_option("--member", o.members, "Explicit member parameter (repeatable)");

  auto* r = app.add_subcommand("render", "Render SVG");
  family_flags(r);
  common(r);
  r->add_option("--format", o.format, "svg")->check(CLI::IsMember({"svg"}));
  r->add_option("input", o.input, "Path, inline JSON or - for stdin");

  auto* s = app.add_subcommand("selftest", "Run the acceptance criteria");
  s->add_option("--criterion", o.criterion, "Run only this criterion");
  s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  s->add_option("--out", o.out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (*b) return cmd_build(o);
    if (*inv) return cmd_invariant(o);
    if (*d) return cmd_distinguish(o);
    if (*r) return cmd_render(o);
    return cmd_selftest(o);
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    std::cerr << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
