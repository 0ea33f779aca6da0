#include "rca/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "rca/block_rep.hpp"
#include "rca/reversibility.hpp"
#include "rca/time_symmetry.hpp"

namespace rca::cli {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- input

LocalRule load_rule(const std::string& arg) {
  if (arg.rfind("eca:", 0) == 0) {
    const std::string code = arg.substr(4);
    std::size_t used = 0;
    int n = -1;
    try {
      n = std::stoi(code, &used);
    } catch (const std::exception&) {
    }
    if (used != code.size() || n < 0 || n > 255)
      throw Error("invalid elementary rule '" + arg + "'");
    return LocalRule::elementary(n);
  }
  std::ifstream in(arg);
  if (!in) throw Error("cannot read rule file '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_rule(ss.str());
  } catch (const ParseError& e) {
    throw Error(arg + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

// ---------------------------------------------------------------- json

json to_json(const Neighborhood& n) { return n.offsets(); }

json to_json(const LocalRule& r) {
  return {{"alphabet", r.alphabet()},
          {"neighborhood", to_json(r.neighborhood())},
          {"table", r.table()}};
}

json to_json(const CellSet& cells) {
  json a = json::array();
  for (const auto& c : cells) a.push_back({c.track, c.position});
  return a;
}

json to_json(const VerificationReport& r) {
  json j = {{"mode", to_string(r.mode)},
            {"tested", r.tested},
            {"mismatches", r.mismatches},
            {"counterexample", nullptr}};
  if (r.first_counterexample) {
    const auto& c = *r.first_counterexample;
    j["counterexample"] = {
        {"input", c.input.cells}, {"expected", c.expected.cells}, {"actual", c.actual.cells}};
  }
  return j;
}

std::string cells_string(const std::vector<int>& cells) {
  std::string s = "[";
  for (std::size_t k = 0; k < cells.size(); ++k) s += (k ? "," : "") + std::to_string(cells[k]);
  return s + "]";
}

std::string rule_line(const LocalRule& r) {
  std::string s = "alphabet " + std::to_string(r.alphabet()) + "; neighborhood " +
                  to_string(r.neighborhood()) + "; table";
  for (int e : r.table()) s += " " + std::to_string(e);
  return s;
}

void print_report(std::ostream& out, const VerificationReport& r) {
  out << (r.tested - r.mismatches) << "/" << r.tested << " match (" << to_string(r.mode) << ")\n";
  if (r.first_counterexample) {
    const auto& c = *r.first_counterexample;
    out << "first counterexample: input " << cells_string(c.input.cells) << " expected "
        << cells_string(c.expected.cells) << " got " << cells_string(c.actual.cells) << "\n";
  }
}

// ---------------------------------------------------------------- options

struct Options {
  std::string rule;
  bool json = false;
  int radius_cap = kDefaultRadiusCap;
  std::string inverse_file;
  std::string output;
  std::string dump;
  int period = 0;
  bool exhaustive = false;
  bool sampled = false;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::string involution;
  int powers = 1;
  int position = 0;
  int alphabet = 2;
  int radius = 1;
};

ReversibleCA load_reversible(const Options& o, const LocalRule& rule) {
  if (!o.inverse_file.empty()) return ReversibleCA::from_pair(rule, load_rule(o.inverse_file));
  return ReversibleCA::from_rule(rule, o.radius_cap);
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.mode = o.exhaustive ? VerifyMode::exhaustive
                        : (o.sampled ? VerifyMode::sampled : VerifyMode::automatic);
  v.samples = o.samples;
  v.seed = o.seed;
  v.exhaustive_budget = o.budget;
  return v;
}

struct Output {
  std::ostream& out;
  bool as_json;
  nlohmann::json doc;

  int finish(int code) {
    if (as_json) out << doc.dump(2) << "\n";
    return code;
  }
};

// ---------------------------------------------------------------- commands

int cmd_check(const Options& o, Output& w) {
  const LocalRule rule = load_rule(o.rule);
  w.doc = {{"command", "check"}, {"rule", to_json(rule)}};
  if (!is_injective(rule)) {
    w.doc["injective"] = false;
    if (!w.as_json) w.out << "not injective\n";
    return w.finish(kFails);
  }
  const ReversibleCA g = load_reversible(o, rule);
  const auto nb = neighborhoods(g);
  w.doc["injective"] = true;
  w.doc["inverse"] = to_json(g.inverse());
  w.doc["neighborhoods"] = {{"forward", to_json(nb.forward)},
                            {"inverse", to_json(nb.inverse)},
                            {"transposed", to_json(nb.transposed)}};
  if (!w.as_json) {
    w.out << "injective\n"
          << "inverse: " << rule_line(g.inverse()) << "\n"
          << "N = " << to_string(nb.forward) << "; N^-1 = " << to_string(nb.inverse)
          << "; N~ = " << to_string(nb.transposed) << "\n";
  }
  return w.finish(kHolds);
}

int cmd_invert(const Options& o, Output& w) {
  const LocalRule rule = load_rule(o.rule);
  w.doc = {{"command", "invert"}, {"rule", to_json(rule)}};
  if (!is_injective(rule)) {
    w.doc["injective"] = false;
    if (!w.as_json) w.out << "not injective\n";
    return w.finish(kFails);
  }
  const LocalRule inv = invert(rule, o.radius_cap);
  w.doc["injective"] = true;
  w.doc["inverse"] = to_json(inv);
  if (!o.output.empty()) {
    write_file(o.output, format_rule(inv));
    if (!w.as_json) w.out << "inverse written to " << o.output << "\n";
  } else if (!w.as_json) {
    w.out << format_rule(inv);
  }
  return w.finish(kHolds);
}

int cmd_bn(const Options& o, Output& w) {
  const ReversibleCA g = load_reversible(o, load_rule(o.rule));
  w.doc = {{"command", "bn"}, {"rule", to_json(g.forward())}};
  json powers = json::array();
  for (int k = 1; k <= std::max(1, o.powers); ++k) {
    const ReversibleCA gk = power(g, k);
    const Neighborhood bn = block_neighborhood(gk);
    const Neighborhood bound = bn_upper_bound(gk);
    const Neighborhood slack = subtract(bound, bn);
    powers.push_back({{"power", k},
                      {"bn", to_json(bn)},
                      {"bound", to_json(bound)},
                      {"slack", to_json(slack)},
                      {"within_bound", bn.is_subset_of(bound)}});
    if (!w.as_json) {
      if (k > 1) w.out << "G^" << k << ": ";
      w.out << "BN = " << to_string(bn) << "; bound = " << to_string(bound)
            << "; slack = " << to_string(slack) << "\n";
    }
  }
  w.doc["powers"] = powers;
  for (const auto& p : powers)
    if (!p["within_bound"].get<bool>()) return w.finish(kFails);
  return w.finish(kHolds);
}

int cmd_blocks(const Options& o, Output& w) {
  const ReversibleCA g = load_reversible(o, load_rule(o.rule));
  const FinitePermutation k = reversible_update(g, o.position);
  const CellSet loc = localization(k);
  const FinitePermutation shrunk = restrict(k, loc);
  w.doc = {{"command", "blocks"},
           {"rule", to_json(g.forward())},
           {"position", o.position},
           {"window", to_json(k.window())},
           {"localization", to_json(loc)}};
  std::string dumps = "# K_" + std::to_string(o.position) + " on the bound window\n" +
                      dump_permutation(k) + "# K_" + std::to_string(o.position) +
                      " restricted to its localization\n" + dump_permutation(shrunk);
  if (!o.dump.empty()) write_file(o.dump, dumps);
  if (!w.as_json) {
    w.out << "window = " << to_string(k.window()) << "\n"
          << "Loc(K_" << o.position << ") = " << to_string(loc) << "\n";
    if (o.dump.empty()) w.out << dumps;
  }
  return w.finish(kHolds);
}

int cmd_verify(const Options& o, Output& w) {
  const ReversibleCA g = load_reversible(o, load_rule(o.rule));
  const BlockCircuit circuit = assemble_circuit(g, o.period);
  const VerificationReport r =
      verify_circuit(circuit, product(g.forward(), g.inverse()), verify_options(o));
  if (!o.dump.empty()) write_file(o.dump, dump_circuit(circuit));
  w.doc = {{"command", "verify"},
           {"rule", to_json(g.forward())},
           {"period", o.period},
           {"report", to_json(r)}};
  if (!w.as_json) print_report(w.out, r);
  return w.finish(r.passed() ? kHolds : kFails);
}

int cmd_ts_check(const Options& o, Output& w) {
  const ReversibleCA g = load_reversible(o, load_rule(o.rule));
  const Involution h = parse_involution(o.involution);
  const bool holds = is_ltsca(g, h);
  w.doc = {{"command", "ts-check"},
           {"rule", to_json(g.forward())},
           {"involution", h.table()},
           {"ltsca", holds}};
  if (!w.as_json) w.out << "LTSCA under h = " << to_string(h) << ": " << (holds ? "yes" : "no") << "\n";
  return w.finish(holds ? kHolds : kFails);
}

int cmd_ts_find(const Options& o, Output& w) {
  const ReversibleCA g = load_reversible(o, load_rule(o.rule));
  const auto found = find_time_symmetries(g);
  json list = json::array();
  for (const auto& h : found) list.push_back(h.table());
  w.doc = {{"command", "ts-find"}, {"rule", to_json(g.forward())}, {"involutions", list}};
  if (!w.as_json) {
    if (found.empty()) w.out << "no radius-0 time symmetry\n";
    for (const auto& h : found) w.out << "h = " << to_string(h) << "\n";
  }
  return w.finish(found.empty() ? kFails : kHolds);
}

int cmd_ebr2(const Options& o, Output& w) {
  const ReversibleCA g = load_reversible(o, load_rule(o.rule));
  const Involution h = parse_involution(o.involution);
  w.doc = {{"command", "ebr2"},
           {"rule", to_json(g.forward())},
           {"involution", h.table()},
           {"period", o.period}};
  if (!is_ltsca(g, h)) {
    w.doc["ltsca"] = false;
    if (!w.as_json) w.out << "not LTSCA under h = " << to_string(h) << "\n";
    return w.finish(kFails);
  }
  const SquareRepresentation s = ebr_of_square(g, h, o.period, verify_options(o));
  if (!o.dump.empty()) write_file(o.dump, dump_circuit(s.circuit));
  w.doc["ltsca"] = true;
  w.doc["l0_localization"] = to_json(s.l0.window());
  w.doc["bn"] = to_json(s.block_nbhd);
  w.doc["l0_within_bn"] = s.l0_within_bn;
  w.doc["report"] = to_json(s.report);
  if (!w.as_json) {
    w.out << "Loc(L_0) = " << to_string(s.l0.window()) << "; BN = " << to_string(s.block_nbhd)
          << "; contained: " << (s.l0_within_bn ? "yes" : "NO (flagged)") << "\n";
    print_report(w.out, s.report);
  }
  return w.finish(s.report.passed() ? kHolds : kFails);
}

int cmd_symmetrize(const Options& o, Output& w) {
  const ReversibleCA f = load_reversible(o, load_rule(o.rule));
  const TimeSymmetrization ts = time_symmetrize(f);
  w.doc = {{"command", "symmetrize"},
           {"rule", to_json(f.forward())},
           {"symmetrized", to_json(ts.automaton.forward())},
           {"inverse", to_json(ts.automaton.inverse())},
           {"involution", ts.symmetry.table()}};
  if (!o.output.empty()) write_file(o.output, format_rule(ts.automaton.forward()));
  if (!w.as_json) {
    if (o.output.empty())
      w.out << format_rule(ts.automaton.forward());
    else
      w.out << "symmetrized rule written to " << o.output << "\n";
    w.out << "involution: " << to_string(ts.symmetry) << "\n";
  }
  return w.finish(kHolds);
}

int cmd_census(const Options& o, Output& w) {
  const int q = o.alphabet, r = o.radius;
  if (q < 1 || r < 0) throw Error("census: alphabet must be >= 1 and radius >= 0");
  const Neighborhood nb = Neighborhood::range(-r, r);
  const std::size_t entries = checked_power(q, nb.size(), 64);
  const std::size_t total = checked_power(q, entries, kDefaultTableCap);

  json list = json::array();
  std::size_t reversible = 0;
  std::vector<int> table(entries, 0);
  for (std::size_t code = 0; code < total; ++code) {
    decode_word(code, q, table);
    std::reverse(table.begin(), table.end());  // table[idx] is digit idx of the code
    const LocalRule rule(q, nb, table);
    if (!is_injective(rule)) continue;
    ++reversible;
    const ReversibleCA g = ReversibleCA::from_rule(rule, o.radius_cap);
    const Neighborhood bn = block_neighborhood(g);
    const Neighborhood bound = bn_upper_bound(g);
    const Neighborhood slack = subtract(bound, bn);
    list.push_back(
        {{"code", code}, {"bn", to_json(bn)}, {"bound", to_json(bound)}, {"slack", to_json(slack)}});
    if (!w.as_json)
      w.out << "rule " << code << ": BN = " << to_string(bn) << "; bound = " << to_string(bound)
            << "; slack = " << to_string(slack) << "\n";
  }
  w.doc = {{"command", "census"},
           {"alphabet", q},
           {"radius", r},
           {"total", total},
           {"reversible", list}};
  if (!w.as_json) w.out << reversible << " of " << total << " rules are reversible\n";
  return w.finish(kHolds);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible cellular automata: block representations and time symmetry", "rca"};
  app.require_subcommand(1);
  Options o;

  auto add_rule = [&](CLI::App* s) {
    s->add_option("rule", o.rule, "Rule file, or eca:<code>")->required();
    s->add_flag("--json", o.json, "Emit a JSON report");
  };
  auto add_inverse = [&](CLI::App* s) {
    s->add_option("--radius-cap", o.radius_cap, "Largest inverse radius to search");
    s->add_option("--inverse", o.inverse_file, "Known inverse rule (verified instead of searched)");
  };
  auto add_verify = [&](CLI::App* s) {
    s->add_option("--period", o.period, "Cyclic period")->required();
    auto* ex = s->add_flag("--exhaustive", o.exhaustive, "Test every configuration");
    auto* sa = s->add_flag("--sampled", o.sampled, "Test random configurations");
    ex->excludes(sa);
    s->add_option("--samples", o.samples, "Number of sampled configurations");
    s->add_option("--seed", o.seed, "Sampling seed");
    s->add_option("--budget", o.budget, "Largest configuration count tested exhaustively");
    s->add_option("--dump", o.dump, "Write the circuit dump to this path");
  };

  auto* check = app.add_subcommand("check", "Injectivity, inverse and neighborhoods");
  add_rule(check);
  add_inverse(check);
  auto* inv = app.add_subcommand("invert", "Synthesize the inverse rule");
  add_rule(inv);
  inv->add_option("--radius-cap", o.radius_cap, "Largest inverse radius to search");
  inv->add_option("-o,--output", o.output, "Write the inverse rule file here");
  auto* bn = app.add_subcommand("bn", "Block neighborhood and its upper bound");
  add_rule(bn);
  add_inverse(bn);
  bn->add_option("--powers", o.powers, "Also report BN(G^k) for k up to this value");
  auto* blocks = app.add_subcommand("blocks", "Tabulate the reversible update K_i");
  add_rule(blocks);
  add_inverse(blocks);
  blocks->add_option("--position", o.position, "Anchor i of K_i");
  blocks->add_option("--dump", o.dump, "Write the permutation dumps to this path");
  auto* verify = app.add_subcommand("verify", "Check the block circuit against G x G^-1");
  add_rule(verify);
  add_inverse(verify);
  add_verify(verify);
  auto* tscheck = app.add_subcommand("ts-check", "Test local time symmetry under an involution");
  add_rule(tscheck);
  add_inverse(tscheck);
  tscheck->add_option("--involution", o.involution, "Permutation of 0..q-1")->required();
  auto* tsfind = app.add_subcommand("ts-find", "List every radius-0 time symmetry");
  add_rule(tsfind);
  add_inverse(tsfind);
  auto* ebr2 = app.add_subcommand("ebr2", "Exact block representation of G^2");
  add_rule(ebr2);
  add_inverse(ebr2);
  ebr2->add_option("--involution", o.involution, "Permutation of 0..q-1")->required();
  add_verify(ebr2);
  auto* sym = app.add_subcommand("symmetrize", "Time-symmetrize F into F x F^-1");
  add_rule(sym);
  add_inverse(sym);
  sym->add_option("-o,--output", o.output, "Write the symmetrized rule file here");
  auto* census = app.add_subcommand("census", "Enumerate rules and report the reversible ones");
  census->add_option("--alphabet", o.alphabet, "Alphabet size")->required();
  census->add_option("--radius", o.radius, "Neighborhood radius")->required();
  census->add_option("--radius-cap", o.radius_cap, "Largest inverse radius to search");
  census->add_flag("--json", o.json, "Emit a JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "rca: " << e.what() << "\n";
    return kUsage;
  }

  Output w{out, o.json, json::object()};
  try {
    if (check->parsed()) return cmd_check(o, w);
    if (inv->parsed()) return cmd_invert(o, w);
    if (bn->parsed()) return cmd_bn(o, w);
    if (blocks->parsed()) return cmd_blocks(o, w);
    if (verify->parsed()) return cmd_verify(o, w);
    if (tscheck->parsed()) return cmd_ts_check(o, w);
    if (tsfind->parsed()) return cmd_ts_find(o, w);
    if (ebr2->parsed()) return cmd_ebr2(o, w);
    if (sym->parsed()) return cmd_symmetrize(o, w);
    if (census->parsed()) return cmd_census(o, w);
  } catch (const NotInjective&) {
    err << "rca: rule is not injective\n";
    return kFails;
  } catch (const std::exception& e) {
    err << "rca: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace rca::cli
