#include <doctest.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "bpm/domino.hpp"
#include "bpm/oracle.hpp"

using namespace bpm;
using namespace bpm::domino;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Parse;
}

// True iff `cells` (any subset of a board) can be tiled by dominoes.
bool tileable(const std::vector<Cell>& cells) {
  if (cells.empty()) return true;
  std::vector<Cell> white, black;
  for (const auto& c : cells) (is_white(c) ? white : black).push_back(c);
  if (white.size() != black.size()) return false;
  std::vector<Edge> edges;
  for (std::size_t l = 0; l < white.size(); ++l)
    for (std::size_t r = 0; r < black.size(); ++r)
      if (edge_adjacent(white[l], black[r])) edges.push_back({static_cast<Index>(l), static_cast<Index>(r)});
  const auto g = build_graph(static_cast<Index>(white.size()), static_cast<Index>(black.size()), std::move(edges));
  return oracle::brute_force_max_matching(g) * 2 == static_cast<Index>(cells.size());
}

// Placements that leave a tileable remainder, by brute force.
std::vector<Placement> expected_moves(const GameSession& s) {
  std::vector<Cell> free;
  for (const auto& c : s.board().cells())
    if (!s.covered(c)) free.push_back(c);
  std::vector<Placement> out;
  for (std::size_t a = 0; a < free.size(); ++a) {
    for (std::size_t b = a + 1; b < free.size(); ++b) {
      if (!edge_adjacent(free[a], free[b])) continue;
      std::vector<Cell> rest;
      for (std::size_t k = 0; k < free.size(); ++k)
        if (k != a && k != b) rest.push_back(free[k]);
      if (tileable(rest)) out.emplace_back(free[a], free[b]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("board parsing") {
  const auto b = Board::from_rows({"##.", ".##"});
  CHECK(b.cells().size() == 4);
  CHECK(b.rows() == 2);
  CHECK(b.cols() == 3);
  CHECK(b.contains({1, 2}));
  CHECK_FALSE(b.contains({0, 2}));
  CHECK(b.to_rows() == std::vector<std::string>{"##.", ".##"});
  CHECK(code_of([] { Board::from_rows({"#x"}); }) == ErrorCode::MalformedBoard);
  CHECK(code_of([] { Board::from_rows({"..", ".."}); }) == ErrorCode::InvalidBoard);
  CHECK(code_of([] { Board::from_rows({"#.", ".#"}); }) == ErrorCode::InvalidBoard);
}

TEST_CASE("board_to_graph") {
  const auto one = board_to_graph(Board::from_rows({"##"}));
  CHECK(one.graph.left_count() == 1);
  CHECK(one.graph.right_count() == 1);
  CHECK(one.graph.edge_count() == 1);

  const auto two_by_three = board_to_graph(Board::from_rows({"###", "###"}));
  CHECK(two_by_three.graph.left_count() == 3);
  CHECK(two_by_three.graph.right_count() == 3);
  CHECK(two_by_three.graph.edge_count() == 7);

  const auto square = board_to_graph(Board::from_rows({"##", "##"}));
  CHECK(square.graph.edge_count() == 4);
  for (Index l = 0; l < 2; ++l) CHECK(square.graph.left_degree(l) == 2);
  for (Index r = 0; r < 2; ++r) CHECK(square.graph.right_degree(r) == 2);
}

TEST_CASE("new_session") {
  CHECK(new_session(Board::from_rows({"###", "###"}), 3).status() == GameStatus::InProgress);
  CHECK(code_of([] { new_session(Board::from_rows({"#.", "##"}), 3); }) == ErrorCode::NotTileable);
  // T-tetromino: balanced colours but no tiling.
  CHECK(code_of([] { new_session(Board::from_rows({"###", ".#."}), 3); }) == ErrorCode::NotTileable);
  CHECK_THROWS_AS(new_session(Board::from_rows({"##"}), 0), std::invalid_argument);
}

TEST_CASE("allowed_moves on fresh boards") {
  CHECK(new_session(Board::from_rows({"##"}), 1).allowed_moves().size() == 1);
  CHECK(new_session(Board::from_rows({"##", "##"}), 1).allowed_moves().size() == 4);
  CHECK(new_session(Board::from_rows({"###", "###"}), 1).allowed_moves().size() == 7);
}

TEST_CASE("apply_move: winning") {
  auto single = new_session(Board::from_rows({"##"}), 1);
  CHECK(single.apply_move({{0, 1}, {0, 0}}).status == GameStatus::Won);

  auto square = new_session(Board::from_rows({"##", "##"}), 1);
  const auto first = square.apply_move({{0, 0}, {0, 1}});
  CHECK(first.accepted);
  CHECK(first.allowed_moves == std::vector<Placement>{{{1, 0}, {1, 1}}});
  const auto second = square.apply_move({{1, 0}, {1, 1}});
  CHECK(second.accepted);
  CHECK(second.status == GameStatus::Won);
  CHECK(second.placements.size() == 2);
  CHECK(code_of([&] { square.allowed_moves(); }) == ErrorCode::GameOver);
}

TEST_CASE("apply_move: forbidden placement on the 1x4 strip") {
  // Covering the middle two cells strands both ends.
  auto s = new_session(Board::from_rows({"####"}), 2);
  const auto out = s.apply_move({{0, 1}, {0, 2}});
  CHECK_FALSE(out.accepted);
  CHECK(out.reason == "blocks_completion");
  CHECK(out.bad_move_count == 1);
  CHECK(out.status == GameStatus::InProgress);
  CHECK(s.placements().empty());
  CHECK_FALSE(s.covered({0, 1}));
  const auto again = s.apply_move({{0, 2}, {0, 1}});
  CHECK(again.status == GameStatus::Lost);
  CHECK(code_of([&] { s.apply_move({{0, 0}, {0, 1}}); }) == ErrorCode::GameOver);
}

TEST_CASE("the 1x4 strip is a smallest board with a forbidden placement") {
  const auto strip = board_to_graph(Board::from_rows({"####"}));
  CHECK(oracle::brute_force_allowed(strip.graph).size() == 2);
  CHECK(strip.graph.edge_count() == 3);
  // The only connected boards with two cells are dominoes; their one edge is allowed.
  for (const auto& rows : {std::vector<std::string>{"##"}, std::vector<std::string>{"#", "#"}}) {
    const auto g = board_to_graph(Board::from_rows(rows)).graph;
    CHECK(oracle::brute_force_allowed(g).size() == static_cast<std::size_t>(g.edge_count()));
  }
}

TEST_CASE("apply_move: protocol errors do not count") {
  auto s = new_session(Board::from_rows({"##", "##"}), 1);
  CHECK(code_of([&] { s.apply_move({{0, 0}, {1, 1}}); }) == ErrorCode::NotAdjacent);
  CHECK(code_of([&] { s.apply_move({{0, 1}, {0, 2}}); }) == ErrorCode::OffBoard);
  s.apply_move({{0, 0}, {1, 0}});
  CHECK(code_of([&] { s.apply_move({{0, 0}, {0, 1}}); }) == ErrorCode::CellOccupied);
  CHECK(s.bad_move_count() == 0);
}

TEST_CASE("allowed_moves matches brute-force tiling on small boards") {
  std::mt19937_64 rng(101);
  int boards = 0;
  for (int trial = 0; trial < 4000 && boards < 150; ++trial) {
    // Random connected subsets of a 3x4 or 4x4 grid up to 14 cells.
    const int rows = 3 + static_cast<int>(trial % 2), cols = 4;
    std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(cols), '.'));
    std::bernoulli_distribution coin(0.75);
    int count = 0;
    for (auto& row : grid)
      for (auto& ch : row)
        if (coin(rng) && count < 14) {
          ch = '#';
          ++count;
        }
    std::optional<GameSession> s;
    try {
      s.emplace(new_session(Board::from_rows(grid), 100));
    } catch (const Error&) {
      continue;
    }
    ++boards;
    while (s->status() == GameStatus::InProgress) {
      const auto moves = s->allowed_moves();
      REQUIRE(moves == expected_moves(*s));
      REQUIRE(!moves.empty());
      REQUIRE(s->apply_move(moves[rng() % moves.size()]).accepted);
    }
    CHECK(s->status() == GameStatus::Won);
  }
  CHECK(boards >= 50);
}
