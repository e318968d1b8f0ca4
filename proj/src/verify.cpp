#include "richman/verify.hpp"

#include <deque>
#include <functional>

#include "richman/classify.hpp"
#include "richman/constructor.hpp"
#include "richman/lattice.hpp"
#include "richman/notation.hpp"
#include "richman/outcome.hpp"
#include "richman/random_game.hpp"

namespace richman {

Player predict_impartial(const Game& g, const BudgetState& s) {
  if (g.is_zero()) return opponent(s.marker);
  if (2 * s.left == s.total)
    return alternating_outcome(g) == AlternatingOutcome::N ? s.marker
                                                          : opponent(s.marker);
  return 2 * s.left > s.total ? Player::Left : Player::Right;
}

Player predict_symmetric_ending(const Game& g, const BudgetState& s) {
  if (g.is_zero()) return opponent(s.marker);
  // even split: as if the marker owner moved first in alternating play
  if (2 * s.left == s.total) return alternating_winner(g, s.marker);
  return s.dominating();
}

std::optional<Player> last_move_winner(const Game& g, const BudgetState& s) {
  const Player d = s.dominating();
  for (const auto& option : g.options(d))
    if (!option.has_options(opponent(d))) return d;
  return std::nullopt;
}

bool has_unique_saddle(const BidMatrix& m) {
  return m.left_security_row().has_value() != m.right_security_column().has_value();
}

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (c.failures != 0) return false;
  return true;
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.counterexample = describe();
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::vector<BudgetState> coordinates(Dollars total) {
  std::vector<BudgetState> out;
  for (Player m : {Player::Left, Player::Right})
    for (Dollars p = total; p >= 0; --p) out.push_back({total, p, m});
  return out;
}

std::string where(const Game& g, const BudgetState& s) {
  return render(g) + " at TB=" + std::to_string(s.total) + " " + to_string(s);
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  const RandomGameParams params{options.max_birthday, options.max_options, 0.3};
  std::vector<Game> general, impartial, symmetric;
  {
    GameGenerator gen(params, options.seed);
    for (std::size_t i = 0; i < options.count; ++i) general.push_back(gen.any());
    GameGenerator imp(params, options.seed + 1);
    for (std::size_t i = 0; i < options.count; ++i) impartial.push_back(imp.impartial());
    GameGenerator sym(params, options.seed + 2);
    for (std::size_t i = 0; i < options.count; ++i)
      symmetric.push_back(sym.symmetric_ending());
  }

  Recorder notation("notation round trip");
  Recorder structure("conjugation and classification");
  Recorder reduction("TB=0 equals alternating play");
  Recorder oracle("solver agrees with oracle");
  Recorder saddle("unique saddle at every coordinate");
  Recorder last_move("last move wins");
  Recorder conj("conjugate form, conjugate outcome");
  Recorder feasible("solved outcomes are feasible");
  Recorder lattice("solved outcomes lie in the lattice");
  Recorder imp_check("impartial predictions");
  Recorder sym_check("symmetric-ending predictions");
  Recorder construction("constructions reproduce their short form");

  std::deque<Solver> solvers;
  std::vector<Lattice> lattices;
  for (Dollars tb = 0; tb <= options.max_total; ++tb) {
    solvers.emplace_back(tb);
    lattices.push_back(build_lattice(tb));
  }

  for (const Game& g : general) {
    notation.expect(parse(render(g)) == g, [&] { return render(g); });
    const Game c = conjugate(g);
    const auto flags = classify(g);
    structure.expect(conjugate(c) == g && c.birthday() == g.birthday() &&
                         (!flags.impartial || (flags.symmetric_ending && flags.dicot)) &&
                         alternating_outcome(c) == mirror(alternating_outcome(g)),
                     [&] { return render(g); });

    const auto w0 = word(solvers[0].outcome(g));
    static constexpr std::string_view kByClass[] = {"LL", "LR", "RL", "RR"};
    reduction.expect(w0 == kByClass[static_cast<int>(alternating_outcome(g))],
                     [&] { return render(g) + " word " + w0; });

    for (Dollars tb = 0; tb <= options.max_total; ++tb) {
      Solver& solver = solvers[static_cast<std::size_t>(tb)];
      for (const auto& s : coordinates(tb)) {
        const Player w = solver.solve(g, s);
        oracle.expect(w == oracle_solve(g, s), [&] { return where(g, s); });
        saddle.expect(has_unique_saddle(solver.bid_matrix(g, s)),
                      [&] { return where(g, s); });
        if (auto lm = last_move_winner(g, s))
          last_move.expect(w == *lm, [&] { return where(g, s); });
        conj.expect(solver.solve(c, s.mirrored()) == opponent(w),
                    [&] { return where(g, s); });
      }
      const OutcomeTuple o = solver.outcome(g);
      const bool ok = feasibility(o).feasible;
      feasible.expect(ok, [&] { return render(g) + " word " + word(o); });
      if (ok)
        lattice.expect(lattices[static_cast<std::size_t>(tb)].contains(to_short_form(o)),
                       [&] { return render(g) + " word " + word(o); });
      conj.expect(conjugate_outcome(o) == solver.outcome(c),
                  [&] { return render(g) + " outcome conjugation"; });
    }
  }

  for (const Game& g : impartial) {
    for (Dollars tb = 0; tb <= options.max_total; ++tb)
      for (const auto& s : coordinates(tb))
        imp_check.expect(classify(g).impartial &&
                             solvers[static_cast<std::size_t>(tb)].solve(g, s) ==
                                 predict_impartial(g, s),
                         [&] { return where(g, s); });
  }
  for (const Game& g : symmetric) {
    for (Dollars tb = 0; tb <= options.max_total; ++tb)
      for (const auto& s : coordinates(tb))
        sym_check.expect(classify(g).symmetric_ending &&
                             solvers[static_cast<std::size_t>(tb)].solve(g, s) ==
                                 predict_symmetric_ending(g, s),
                         [&] { return where(g, s); });
  }

  for (Dollars tb = 0; tb <= options.max_total; ++tb) {
    for (const auto& sf : enumerate_feasible(tb)) {
      std::string detail;
      bool ok = false;
      try {
        const Game g = construct(tb, sf);
        ok = to_short_form(solvers[static_cast<std::size_t>(tb)].outcome(g)) == sf;
        detail = render(g);
      } catch (const std::exception& e) {
        detail = e.what();
      }
      construction.expect(ok, [&] {
        return "TB=" + std::to_string(tb) + " " + to_string(sf) + ": " + detail;
      });
    }
  }

  VerifyReport report;
  for (Recorder* r : {&notation, &structure, &reduction, &oracle, &saddle, &last_move,
                      &conj, &feasible, &lattice, &imp_check, &sym_check, &construction})
    report.checks.push_back(r->done());
  return report;
}

}  // namespace richman
