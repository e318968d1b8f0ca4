#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "richman/classify.hpp"
#include "richman/constructor.hpp"
#include "richman/lattice.hpp"
#include "richman/notation.hpp"
#include "richman/play.hpp"
#include "richman/records.hpp"
#include "richman/service.hpp"
#include "richman/solver.hpp"
#include "richman/verify.hpp"

namespace richman::cli {

namespace {

const std::vector<std::string> kDay2Games = {"0",   "*",      "1",   "^",
                                             "{*|*}", "{*|}", "1/2", "+-1"};

const std::vector<std::string> kFeasibleTb3Games = {
    "1",     "{0|^}", "{{0|^}|}", "^",     "{0|{v|0}}", "{*|}",
    "{*|^}", "*",     "{v|}",     "{v|^}", "0"};

Player parse_player(const std::string& s) {
  if (s == "L" || s == "Left" || s == "left" || s == "l") return Player::Left;
  if (s == "R" || s == "Right" || s == "right" || s == "r") return Player::Right;
  throw CLI::ValidationError("player must be L or R, got '" + s + "'");
}

std::pair<Dollars, Dollars> parse_range(const std::string& text) {
  auto number = [&](std::string_view part) {
    Dollars v = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || end != part.data() + part.size() || v < 0)
      throw CLI::ValidationError("bad tb range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const Dollars v = number(text);
    return {v, v};
  }
  const Dollars lo = number(std::string_view(text).substr(0, dots));
  const Dollars hi = number(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw CLI::ValidationError("empty tb range '" + text + "'");
  return {lo, hi};
}

ShortForm parse_short(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("short form must be a,b");
  auto number = [&](std::string_view part) {
    Dollars v = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || end != part.data() + part.size() || v < 0)
      throw CLI::ValidationError("bad short form '" + text + "'");
    return v;
  };
  return {number(std::string_view(text).substr(0, comma)),
          number(std::string_view(text).substr(comma + 1))};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_outcome_text(std::ostream& out, const OutcomeTuple& o) {
  const auto report = feasibility(o);
  out << "word " << word(o) << "\n";
  if (report.monotone_with_marker && report.monotone_without_marker)
    out << "short_form " << to_string(to_short_form(o)) << "\n";
  else
    out << "short_form none\n";
  out << "feasible " << yes_no(report.feasible) << "\n";
}

struct Options {
  std::string format = "text";
  // solve / classify / play
  std::string game;
  Dollars tb = 0;
  std::optional<Dollars> p;
  std::string marker = "L";
  std::string human = "L";
  // table
  std::vector<std::string> games;
  std::string range = "0..3";
  std::string preset;
  // construct
  std::string short_form;
  // verify
  std::size_t count = 500;
  std::uint64_t seed = 7;
  std::uint32_t max_birthday = 4;
  std::uint32_t max_options = 2;
  // serve
  std::string host = "127.0.0.1";
  int port = 8080;
};

int cmd_solve(const Options& o, std::ostream& out) {
  const Game g = parse(o.game);
  Solver solver(o.tb);
  if (!o.p) {
    const OutcomeTuple t = solver.outcome(g);
    if (o.format == "json")
      out << outcome_record(t).dump() << "\n";
    else
      print_outcome_text(out, t);
    return 0;
  }
  const BudgetState s{o.tb, *o.p, parse_player(o.marker)};
  s.validate();
  const Player w = solver.solve(g, s);
  const Action left = solver.best_action(g, s, Player::Left);
  const Action right = solver.best_action(g, s, Player::Right);
  if (o.format == "json") {
    out << json{{"state", to_json(s)},
                {"winner", player_name(w)},
                {"left_bid", to_json(left.bid)},
                {"right_bid", to_json(right.bid)}}
               .dump()
        << "\n";
  } else {
    out << "state " << to_string(s) << "\n"
        << "winner " << player_name(w) << "\n"
        << "left_bid " << to_string(left.bid) << "\n"
        << "right_bid " << to_string(right.bid) << "\n";
  }
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  auto [lo, hi] = parse_range(o.range);
  std::vector<std::string> games = o.games;
  if (games.empty()) games = o.preset == "feasible" ? kFeasibleTb3Games : kDay2Games;

  json rows = json::array();
  std::vector<std::vector<std::string>> text;
  std::vector<std::string> header{"G"};
  for (Dollars tb = lo; tb <= hi; ++tb) header.push_back("o_" + std::to_string(tb));
  text.push_back(header);

  for (const auto& name : games) {
    const Game g = parse(name);
    json outcomes = json::array();
    std::vector<std::string> cells{name};
    for (Dollars tb = lo; tb <= hi; ++tb) {
      const OutcomeTuple t = solve_outcome(g, tb);
      outcomes.push_back(outcome_record(t));
      cells.push_back(word(t));
    }
    rows.push_back({{"game", name}, {"outcomes", outcomes}});
    text.push_back(cells);
  }

  if (o.format == "json") {
    out << rows.dump() << "\n";
    return 0;
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : text)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : text) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += " | ";
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
    }
    out << line << "\n";
  }
  return 0;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const ShortForm sf = parse_short(o.short_form);
  const Construction c = construct_verified(o.tb, sf);
  if (o.format == "json") {
    out << json{{"tb", o.tb},
                {"short_form", {{"a", sf.a}, {"b", sf.b}}},
                {"game", render(c.game)},
                {"word", word(c.outcome)}}
               .dump()
        << "\n";
  } else {
    out << render(c.game) << "\n";
  }
  return 0;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  const Lattice l = build_lattice(o.tb);
  if (o.format == "json") {
    out << lattice_record(l).dump() << "\n";
  } else if (o.format == "text") {
    out << "tb " << l.total << "\nnodes " << l.nodes.size() << "\nedges " << l.edges.size()
        << "\n";
    for (const auto& [from, to] : l.edges)
      out << to_string(from) << " -> " << to_string(to) << "\n";
  } else {
    out << export_dot(l);
  }
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Game g = parse(o.game);
  const Classification c = classify(g);
  const auto alt = alternating_outcome(g);
  if (o.format == "json") {
    out << json{{"game", render(g)},
                {"birthday", g.birthday()},
                {"impartial", c.impartial},
                {"dicot", c.dicot},
                {"symmetric_ending", c.symmetric_ending},
                {"alternating_outcome", to_string(alt)}}
               .dump()
        << "\n";
  } else {
    out << "game " << render(g) << "\n"
        << "birthday " << g.birthday() << "\n"
        << "impartial " << yes_no(c.impartial) << "\n"
        << "dicot " << yes_no(c.dicot) << "\n"
        << "symmetric_ending " << yes_no(c.symmetric_ending) << "\n"
        << "alternating_outcome " << to_string(alt) << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  VerifyOptions v;
  v.max_total = o.tb;
  v.count = o.count;
  v.seed = o.seed;
  v.max_birthday = o.max_birthday;
  v.max_options = o.max_options;
  const VerifyReport report = run_verification(v);
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"cases", c.cases},
                        {"failures", c.failures},
                        {"counterexample", c.failures ? json(c.counterexample) : json(nullptr)}});
    out << json{{"ok", report.ok()}, {"checks", checks}}.dump() << "\n";
  } else {
    for (const auto& c : report.checks) {
      out << (c.failures ? "FAIL " : "ok   ") << c.name << " (" << c.cases << " cases";
      if (c.failures) out << ", " << c.failures << " failures";
      out << ")\n";
    }
  }
  for (const auto& c : report.checks)
    if (c.failures) err << "counterexample for " << c.name << ": " << c.counterexample << "\n";
  return report.ok() ? 0 : 1;
}

std::optional<Bid> parse_bid(std::string line) {
  line.erase(std::remove_if(line.begin(), line.end(), ::isspace), line.end());
  Bid bid;
  if (!line.empty() && line.back() == '^') {
    bid.include_marker = true;
    line.pop_back();
  }
  auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), bid.amount);
  if (line.empty() || ec != std::errc() || end != line.data() + line.size()) return std::nullopt;
  return bid;
}

void describe(std::ostream& out, const PlaySession& session) {
  const BudgetState& s = session.state();
  out << "position " << render(session.form()) << "  Left $" << s.left << ", Right $"
      << s.right() << ", marker with " << player_name(s.marker) << "\n";
}

int cmd_play(const Options& o, std::ostream& out, std::istream& in) {
  const Game g = parse(o.game);
  if (!o.p) throw CLI::ValidationError("play needs --p");
  const BudgetState s{o.tb, *o.p, parse_player(o.marker)};
  s.validate();
  PlaySession session("cli", g, s, parse_player(o.human));
  const std::string you = std::string(player_name(session.human()));

  std::string line;
  describe(out, session);
  while (session.phase() != Phase::Finished) {
    if (session.phase() == Phase::AwaitingBid) {
      out << you << " bid (amount, ^ to add the marker)> " << std::flush;
      if (!std::getline(in, line) || line == "quit") return 0;
      const auto bid = parse_bid(line);
      if (!bid) {
        out << "not a bid: '" << line << "'\n";
        continue;
      }
      try {
        const Round r = session.submit_bid(*bid);
        out << "Left bids " << to_string(r.left_bid) << ", Right bids "
            << to_string(r.right_bid) << ": " << player_name(r.mover) << " moves\n";
        if (r.move_index)
          out << player_name(r.mover) << " plays to " << render(*r.moved_to) << "\n";
        else if (session.phase() == Phase::Finished)
          out << player_name(r.mover) << " has no move\n";
      } catch (const IllegalBid& e) {
        out << e.what() << "\n";
        continue;
      }
    } else {
      const auto options = session.form().options(session.human());
      for (std::size_t i = 0; i < options.size(); ++i)
        out << "  [" << i << "] " << render(options[i]) << "\n";
      out << you << " move> " << std::flush;
      if (!std::getline(in, line) || line == "quit") return 0;
      std::size_t index = 0;
      auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), index);
      if (line.empty() || ec != std::errc() || end != line.data() + line.size() ||
          index >= options.size()) {
        out << "choose 0.." << options.size() - 1 << "\n";
        continue;
      }
      session.submit_move(index);
    }
    if (session.phase() != Phase::Finished) describe(out, session);
  }
  out << player_name(*session.winner()) << " wins"
      << (*session.winner() == session.human() ? " (you)" : " (engine)") << "\n";
  return 0;
}

int cmd_serve(const Options& o, std::ostream& out) {
  Service service;
  HttpServer server(service);
  const int port = server.bind(o.host, o.port);
  if (port < 0) throw std::runtime_error("cannot bind " + o.host + ":" + std::to_string(o.port));
  out << "listening on http://" << o.host << ":" << port << std::endl;
  return server.listen() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Exact solver for discrete-bidding combinatorial games", "richman"};
  app.require_subcommand(1);
  Options o;

  auto add_tb = [&](CLI::App* sub, bool required) {
    auto opt = sub->add_option("--tb", o.tb, "Total budget")->check(CLI::NonNegativeNumber);
    if (required) opt->required();
  };
  auto add_coordinate = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Left's budget")->check(CLI::NonNegativeNumber);
    sub->add_option("--marker", o.marker, "Marker owner, L or R")->default_str("L");
  };

  auto* solve = app.add_subcommand("solve", "Outcome of a game form");
  solve->add_option("game", o.game, "Game notation")->required();
  add_tb(solve, true);
  add_coordinate(solve);

  auto* table = app.add_subcommand("table", "Outcome words over a range of total budgets");
  table->add_option("games", o.games, "Game notations (default: preset)");
  table->add_option("--tb-range", o.range, "lo..hi")->default_str("0..3");
  table->add_option("--preset", o.preset, "day2 or feasible")
      ->check(CLI::IsMember({"day2", "feasible"}));

  auto* construct = app.add_subcommand("construct", "A form realizing a short form");
  add_tb(construct, true);
  construct->add_option("--short", o.short_form, "a,b")->required();

  auto* lattice = app.add_subcommand("lattice", "The outcome lattice for one total budget");
  add_tb(lattice, true);

  auto* classify = app.add_subcommand("classify", "Structural flags and alternating outcome");
  classify->add_option("game", o.game, "Game notation")->required();

  auto* verify = app.add_subcommand("verify", "Invariant suites on a seeded random corpus");
  o.tb = 3;
  verify->add_option("--tb", o.tb, "Largest total budget")->check(CLI::NonNegativeNumber);
  verify->add_option("--count", o.count, "Forms per corpus");
  verify->add_option("--seed", o.seed, "Corpus seed");
  verify->add_option("--max-birthday", o.max_birthday, "Birthday bound");
  verify->add_option("--max-options", o.max_options, "Options per side")
      ->check(CLI::PositiveNumber);

  auto* play = app.add_subcommand("play", "Play against the engine on stdin/stdout");
  play->add_option("game", o.game, "Game notation")->required();
  add_tb(play, true);
  add_coordinate(play);
  play->add_option("--human", o.human, "Your side, L or R")->default_str("L");

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", o.host)->default_str("127.0.0.1");
  serve->add_option("--port", o.port)->check(CLI::Range(0, 65535))->default_str("8080");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  // --format choices differ per subcommand; validated after parsing
  std::string format;
  for (auto* sub : {solve, table, construct, lattice, classify, verify})
    sub->add_option("--format", format, "Output format");

  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  std::vector<std::string> allowed{"text", "json"};
  if (name == "lattice") allowed = {"dot", "json", "text"};
  o.format = format.empty() ? allowed.front() : format;
  if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end()) {
    err << "--format for " << name << " must be one of";
    for (const auto& a : allowed) err << " " << a;
    err << "\n";
    return 2;
  }
  if (o.p && *o.p > o.tb) {
    err << "--p must be at most --tb\n";
    return 2;
  }

  try {
    if (name == "solve") return cmd_solve(o, out);
    if (name == "table") return cmd_table(o, out);
    if (name == "construct") return cmd_construct(o, out);
    if (name == "lattice") return cmd_lattice(o, out);
    if (name == "classify") return cmd_classify(o, out);
    if (name == "verify") return cmd_verify(o, out, err);
    if (name == "play") return cmd_play(o, out, in);
    if (name == "serve") return cmd_serve(o, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "cannot parse game: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace richman::cli
