#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 domain error (NotHyperbolic, InadmissibleOrder,
// NotSL2Quotient, OddOrder), 2 usage error, 3 CountOverflow, 4 failed
// self-verification.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rspin/json_io.hpp"
#include "rspin/moduli.hpp"
#include "rspin/orbifold.hpp"
#include "rspin/orbits.hpp"
#include "rspin/presentation.hpp"
#include "rspin/roots.hpp"
#include "rspin/seifert.hpp"
#include "rspin/twist.hpp"
#include "rspin/verify.hpp"

namespace rspin::cli {

enum exit_code : int { ok = 0, domain_error = 1, usage_error = 2, overflow = 3, verification_failed = 4 };

struct config {
  std::uint64_t state_cap = default_state_cap;
  bool json_output = false;
  bool text_output = false;  ///< tables instead of JSON for solve, recognize, orbits, moduli
  std::uint64_t seed = 0;
};

namespace detail {

struct usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct verification_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inline text, or the contents of a file when written as @path.
inline std::string read_argument(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw usage("cannot read file '" + arg.substr(1) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& arg, const char* what) {
  try {
    return json::parse(read_argument(arg));
  } catch (const json::exception& e) {
    throw usage(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

inline signature parse_signature(const std::string& arg) {
  const json j = parse_json(arg, "signature");
  try {
    return j.get<signature>();
  } catch (const json::exception& e) {
    throw usage(std::string("signature must look like {\"genus\":g,\"cone_points\":[...]}: ") + e.what());
  }
}

/// "s1,t1,s2,t2"; an empty string, "-" or "()" is the empty tuple.
inline std::vector<std::int64_t> parse_residues(const std::string& arg) {
  std::vector<std::int64_t> out;
  std::string text = read_argument(arg);
  if (text == "-" || text == "()") return out;
  for (char& c : text)
    if (c == '(' || c == ')') c = ' ';
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t\n");
    if (first == std::string::npos) {
      if (ss.eof() && out.empty()) break;
      throw usage("empty entry in tuple '" + arg + "'");
    }
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t\n", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw usage("tuple entry '" + item + "' is not an integer");
    }
  }
  return out;
}

/// JSON array of generators, or compact tokens such as "U1 V1^-1 W1^2".
inline twist_word parse_word(const std::string& arg) {
  const std::string text = read_argument(arg);
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string::npos) return {};
  if (text[first] == '[') {
    try {
      return json::parse(text).get<twist_word>();
    } catch (const std::exception& e) {
      throw usage(std::string("malformed twist word JSON: ") + e.what());
    }
  }
  twist_word word;
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::stringstream ss(spaced);
  std::string tok;
  while (ss >> tok) {
    twist_generator gen;
    switch (tok[0]) {
      case 'U': case 'u': gen.family = twist_family::U; break;
      case 'V': case 'v': gen.family = twist_family::V; break;
      case 'W': case 'w': gen.family = twist_family::W; break;
      default: throw usage("twist generator '" + tok + "' must start with U, V or W");
    }
    try {
      const auto caret = tok.find('^');
      std::size_t used = 0;
      const std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
      gen.index = std::stoi(idx, &used);
      if (used != idx.size()) throw std::invalid_argument(tok);
      if (caret != std::string::npos) {
        const std::string pw = tok.substr(caret + 1);
        gen.power = std::stoll(pw, &used);
        if (used != pw.size()) throw std::invalid_argument(tok);
      }
    } catch (const std::exception&) {
      throw usage("cannot parse twist generator '" + tok + "'");
    }
    word.push_back(gen);
  }
  return word;
}

inline std::int64_t parse_order(const std::string& arg) {
  try {
    std::size_t used = 0;
    const auto r = std::stoll(arg, &used);
    if (used != arg.size() || r < 1) throw std::invalid_argument(arg);
    return r;
  } catch (const std::exception&) {
    throw usage("root order '" + arg + "' must be a positive integer");
  }
}

inline root_tuple parse_root(const root_context& ctx, const std::string& arg) {
  auto coords = parse_residues(arg);
  if (coords.size() != 2 * static_cast<std::size_t>(ctx.genus()))
    throw usage("tuple has " + std::to_string(coords.size()) + " entries, genus " + std::to_string(ctx.genus()) +
                " needs " + std::to_string(2 * ctx.genus()));
  return root_tuple(ctx.order, std::move(coords));
}

inline std::string fibre_list(const seifert_invariants& inv) {
  std::string out;
  for (const auto& f : inv.fibres) out += (out.empty() ? "(" : " (") + std::to_string(f.alpha) + "," + std::to_string(f.beta) + ")";
  return out.empty() ? "none" : out;
}

inline void print_context(std::ostream& out, const root_context& ctx) {
  std::string ks;
  for (auto k : ctx.k) ks += (ks.empty() ? "" : ",") + std::to_string(k);
  out << "signature:     " << ctx.sig.str() << "\n"
      << "r:             " << ctx.order << "\n"
      << "b:             " << ctx.invariants.b << "\n"
      << "fibres:        " << fibre_list(ctx.invariants) << "\n"
      << "k:             " << (ks.empty() ? "none" : ks) << "\n"
      << "euler number:  " << ctx.euler_number << "\n";
}

inline std::string sheets_list(const moduli_report& rep) {
  std::string out;
  for (const auto& c : rep.components) out += (out.empty() ? "" : ", ") + std::to_string(c.sheets);
  return out;
}

}  // namespace detail

/// Parses and executes one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  config cfg;
  if (const char* env = std::getenv("RSPIN_STATE_CAP")) {
    try {
      cfg.state_cap = std::stoull(env);
    } catch (const std::exception&) {
      err << "usage: RSPIN_STATE_CAP is not a positive integer\n";
      return usage_error;
    }
  }

  CLI::App app{"r-th roots of unit tangent bundles of hyperbolic 2-orbifolds", "rspin"};
  app.require_subcommand(1);
  app.add_option("--cap", cfg.state_cap, "maximum number of states materialized (r^{2g})")->check(CLI::PositiveNumber);
  auto* json_flag = app.add_flag("--json", cfg.json_output, "emit JSON from every subcommand");
  app.add_flag("--text", cfg.text_output, "human-readable tables for solve, recognize, orbits and moduli")
      ->excludes(json_flag);
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  std::string sig_arg, r_arg, tuple_arg, word_arg, inv_arg, range_arg = "{}", group_arg = "all";

  auto* chi = app.add_subcommand("chi", "orbifold Euler characteristic");
  chi->add_option("sig", sig_arg)->required();
  auto* roots = app.add_subcommand("roots", "admissible root orders");
  roots->add_option("sig", sig_arg)->required();
  auto* solve = app.add_subcommand("solve", "solve the Raymond-Vasquez relations");
  solve->add_option("sig", sig_arg)->required();
  solve->add_option("r", r_arg)->required();
  auto* recognize = app.add_subcommand("recognize", "recover the fibre index from Seifert invariants");
  recognize->add_option("invariants", inv_arg)->required();
  auto* enumerate = app.add_subcommand("enumerate", "list every r-th root");
  enumerate->add_option("sig", sig_arg)->required();
  enumerate->add_option("r", r_arg)->required();
  auto* twist = app.add_subcommand("twist", "apply a Dehn-twist word to a root");
  twist->add_option("sig", sig_arg)->required();
  twist->add_option("r", r_arg)->required();
  twist->add_option("tuple", tuple_arg)->required();
  twist->add_option("word", word_arg)->required();
  auto* reduce = app.add_subcommand("reduce", "standard form of a root with a twist-word witness");
  reduce->add_option("sig", sig_arg)->required();
  reduce->add_option("r", r_arg)->required();
  reduce->add_option("tuple", tuple_arg)->required();
  auto* orbits = app.add_subcommand("orbits", "exhaustive orbit partition");
  orbits->add_option("sig", sig_arg)->required();
  orbits->add_option("r", r_arg)->required();
  auto* moduli = app.add_subcommand("moduli", "component and sheet census of the moduli space");
  moduli->add_option("sig", sig_arg)->required();
  moduli->add_option("r", r_arg)->required();
  auto* present = app.add_subcommand("present", "group presentations");
  present->add_option("sig", sig_arg)->required();
  present->add_option("r", r_arg)->required();
  present->add_option("tuple", tuple_arg)->required();
  present->add_option("--group", group_arg, "orbifold, tangent, root or all")
      ->check(CLI::IsMember({"orbifold", "tangent", "root", "all"}));
  auto* verify = app.add_subcommand("verify", "closed forms against brute force over a signature grid");
  verify->add_option("range", range_arg,
                     R"(JSON such as {"max_genus":3,"max_cones":3,"max_multiplicity":9,"max_order":60})");

  // Subcommand options may follow the subcommand as well.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> argv_store{"rspin"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return usage_error;
  }

  // Subcommands whose result is a report default to JSON.
  const bool report_json = !cfg.text_output;

  try {
    const auto context = [&] { return solve_raymond_vasquez(detail::parse_signature(sig_arg), detail::parse_order(r_arg)); };

    if (chi->parsed()) {
      const auto sig = detail::parse_signature(sig_arg);
      const auto value = chi_orb(sig);
      if (cfg.json_output)
        out << json{{"signature", sig}, {"chi_orb", value}, {"hyperbolic", is_hyperbolic(sig)}}.dump() << "\n";
      else
        out << value << "\n";
    } else if (roots->parsed()) {
      const auto sig = detail::parse_signature(sig_arg);
      const auto orders = admissible_root_orders(sig);
      if (cfg.json_output) {
        out << json{{"signature", sig}, {"orders", orders}}.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < orders.size(); ++i) out << (i ? " " : "") << orders[i];
        out << "\n";
      }
    } else if (solve->parsed()) {
      const auto ctx = context();
      if (report_json)
        out << json(ctx).dump() << "\n";
      else
        detail::print_context(out, ctx);
    } else if (recognize->parsed()) {
      seifert_invariants inv;
      try {
        inv = detail::parse_json(inv_arg, "invariants").get<seifert_invariants>();
      } catch (const json::exception& e) {
        throw detail::usage(std::string("invariants must look like {\"genus\":g,\"b\":b,\"pairs\":[[a,b],...]}: ") +
                            e.what());
      }
      const auto ctx = recognize_fibre_index(inv);
      if (report_json)
        out << json(ctx).dump() << "\n";
      else
        detail::print_context(out, ctx);
    } else if (enumerate->parsed()) {
      const auto ctx = context();
      for (const auto& root : enumerate_roots(ctx, cfg.state_cap)) {
        if (cfg.json_output)
          out << json(root).dump() << "\n";
        else
          out << (root.coords().empty() ? "()" : root.str()) << "\n";
      }
    } else if (twist->parsed()) {
      const auto ctx = context();
      const auto result = apply_word(detail::parse_root(ctx, tuple_arg), detail::parse_word(word_arg));
      if (cfg.json_output)
        out << json(result).dump() << "\n";
      else
        out << (result.coords().empty() ? "()" : result.str()) << "\n";
    } else if (reduce->parsed()) {
      const auto ctx = context();
      const auto root = detail::parse_root(ctx, tuple_arg);
      const auto red = reduce_with_witness(root);
      const auto replay = apply_word(root, red.witness);
      if (replay != red.form.representative())
        throw detail::verification_failure("witness replays to " + replay.str() + ", expected " +
                                           red.form.representative().str());
      if (cfg.json_output) {
        out << json{{"root", root}, {"form", red.form}, {"canonical", replay}, {"witness", red.witness}, {"replay_verified", true}}
                   .dump()
            << "\n";
      } else {
        out << "form:      " << red.form.str() << "\n"
            << "canonical: " << (replay.coords().empty() ? "()" : replay.str()) << "\n"
            << "witness:   " << (red.witness.empty() ? "(empty)" : to_string(red.witness)) << "\n"
            << "replay:    verified\n";
      }
    } else if (orbits->parsed()) {
      const auto ctx = context();
      const auto partition = partition_orbits(ctx, {cfg.state_cap, {1}});
      if (report_json) {
        out << json(partition).dump() << "\n";
      } else {
        out << "r=" << partition.order << " g=" << partition.genus << " orbits=" << partition.orbits.size() << "\n";
        for (const auto& o : partition.orbits)
          out << std::left << std::setw(16) << o.label.str() << " size " << std::setw(10) << o.size << " rep "
              << (o.representative.coords().empty() ? "()" : o.representative.str()) << "\n";
      }
    } else if (moduli->parsed()) {
      const auto report = compute_moduli_report(context(), {cfg.state_cap, true});
      if (report_json) {
        out << json(report).dump() << "\n";
      } else {
        out << "base:        " << report.context.sig.str() << ", r=" << report.context.order << "\n"
            << "components:  " << report.components.size() << "\n"
            << "sheets:      " << detail::sheets_list(report) << " (total " << report.total_sheets() << ")\n";
        for (const auto& c : report.components)
          out << "  " << std::left << std::setw(16) << c.label.str() << " " << c.sheets << "\n";
        out << "verified:    " << (report.verified ? "against exhaustive orbit partition" : "closed form only") << "\n"
            << "note:        " << report.base_note << "\n";
      }
    } else if (present->parsed()) {
      const auto ctx = context();
      const auto root = detail::parse_root(ctx, tuple_arg);
      std::vector<group_kind> kinds;
      if (group_arg == "orbifold" || group_arg == "all") kinds.push_back(group_kind::orbifold);
      if (group_arg == "tangent" || group_arg == "all") kinds.push_back(group_kind::tangent);
      if (group_arg == "root" || group_arg == "all") kinds.push_back(group_kind::root);
      json all = json::object();
      for (auto kind : kinds) {
        const auto p = root_group_presentation(ctx, root, kind);
        if (cfg.json_output)
          all[to_string(kind)] = p;
        else
          out << render(p);
      }
      if (cfg.json_output) out << all.dump() << "\n";
    } else if (verify->parsed()) {
      const json j = detail::parse_json(range_arg, "range");
      verify_range range;
      try {
        range.max_genus = j.value("max_genus", range.max_genus);
        range.max_cones = j.value("max_cones", range.max_cones);
        range.max_multiplicity = j.value("max_multiplicity", range.max_multiplicity);
        range.max_order = j.value("max_order", range.max_order);
        range.random_samples = j.value("samples", range.random_samples);
      } catch (const json::exception& e) {
        throw detail::usage(std::string("bad range: ") + e.what());
      }
      range.census_cap = std::min(range.census_cap, cfg.state_cap);
      const auto results = run_verification(range, cfg.seed);
      bool all_pass = true;
      json rows = json::array();
      for (const auto& c : results) {
        all_pass = all_pass && c.passed();
        if (cfg.json_output) {
          rows.push_back({{"check", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.passed()},
                          {"first_failure", c.first_failure}});
        } else {
          out << (c.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(60) << c.name << std::right
              << std::setw(10) << c.cases << " cases";
          if (!c.passed()) out << "  " << c.failures << " failures, first: " << c.first_failure;
          out << "\n";
        }
      }
      if (cfg.json_output) out << json{{"passed", all_pass}, {"checks", rows}}.dump() << "\n";
      if (!all_pass) {
        err << "VerificationFailed: at least one check failed\n";
        return verification_failed;
      }
    }
  } catch (const detail::usage& e) {
    err << "usage: " << e.what() << "\n";
    return usage_error;
  } catch (const detail::verification_failure& e) {
    err << "VerificationFailed: " << e.what() << "\n";
    return verification_failed;
  } catch (const error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case error_kind::not_hyperbolic:
      case error_kind::inadmissible_order:
      case error_kind::not_sl2_quotient:
      case error_kind::odd_order:
        return domain_error;
      case error_kind::count_overflow:
        return overflow;
      default:
        return usage_error;
    }
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return usage_error;
  } catch (const std::domain_error& e) {
    err << "usage: " << e.what() << "\n";
    return usage_error;
  } catch (const std::overflow_error& e) {
    err << "CountOverflow: " << e.what() << "\n";
    return overflow;
  } catch (const std::logic_error& e) {
    err << "VerificationFailed: " << e.what() << "\n";
    return verification_failed;
  } catch (const std::exception& e) {
    err << "usage: " << e.what() << "\n";
    return usage_error;
  }
  return ok;
}

}  // namespace rspin::cli
