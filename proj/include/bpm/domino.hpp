#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "bpm/dynamic.hpp"

namespace bpm::domino {

struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline bool is_white(const Cell& c) { return (c.row + c.col) % 2 == 0; }
inline bool edge_adjacent(const Cell& a, const Cell& b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

// A finite, edge-connected set of unit cells.
class Board {
 public:
  // Rows of '#' (cell) and '.' (hole); row 0 is the first string.
  // Throws Error{MalformedBoard} on other characters, Error{InvalidBoard}
  // if the board is empty or not edge-connected.
  static Board from_rows(const std::vector<std::string>& rows);
  static Board from_cells(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }  // row-major
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool contains(const Cell& c) const { return index_of(c) >= 0; }
  // Position of c in cells(), or -1.
  int index_of(const Cell& c) const;
  std::vector<std::string> to_rows() const;

 private:
  Board() = default;
  void validate() const;

  std::vector<Cell> cells_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> grid_;  // rows_ * cols_, cell position or -1
};

// White cells on the left, black cells on the right, both in row-major order;
// an edge for every pair of edge-adjacent cells.
struct BoardGraph {
  BipartiteGraph graph;
  std::vector<Cell> left_cells;
  std::vector<Cell> right_cells;
  std::vector<Index> node_of_cell;  // parallel to Board::cells(), index within its side

  Cell cell_of(bool white, Index node) const {
    return white ? left_cells[static_cast<std::size_t>(node)] : right_cells[static_cast<std::size_t>(node)];
  }
};

BoardGraph board_to_graph(const Board& b);

// Two cells, stored in row-major order.
struct Placement {
  Cell first;
  Cell second;

  Placement() = default;
  Placement(Cell a, Cell b) : first(a < b ? a : b), second(a < b ? b : a) {}
  friend bool operator==(const Placement&, const Placement&) = default;
  friend auto operator<=>(const Placement&, const Placement&) = default;
};

enum class GameStatus { InProgress, Won, Lost };
std::string_view to_string(GameStatus s);

struct MoveOutcome {
  bool accepted = false;
  std::string reason;  // "blocks_completion" when rejected, empty otherwise
  Index bad_move_count = 0;
  Index max_bad_moves = 0;
  GameStatus status = GameStatus::InProgress;
  std::vector<Placement> placements;
  std::vector<Placement> allowed_moves;  // empty once the game is over
};

class GameSession {
 public:
  // Throws Error{NotTileable} if the board has no perfect tiling and
  // std::invalid_argument if max_bad_moves < 1.
  GameSession(std::string id, Board board, Index max_bad_moves);

  const std::string& id() const noexcept { return id_; }
  const Board& board() const noexcept { return board_; }
  const std::vector<Placement>& placements() const noexcept { return placements_; }
  Index bad_move_count() const noexcept { return bad_moves_; }
  Index max_bad_moves() const noexcept { return max_bad_moves_; }
  GameStatus status() const noexcept { return status_; }
  bool covered(const Cell& c) const;

  // Placements whose edge is allowed in the current reduced graph.
  // Throws Error{GameOver} unless the game is in progress.
  std::vector<Placement> allowed_moves() const;

  // Throws Error{GameOver}, Error{OffBoard}, Error{NotAdjacent} or
  // Error{CellOccupied}; none of these count as bad moves.
  MoveOutcome apply_move(const Placement& p);

  const DynamicState& state() const noexcept { return state_; }

 private:
  std::vector<Placement> current_allowed() const;

  std::string id_;
  Board board_;
  BoardGraph graph_;
  DynamicState state_;
  std::vector<char> covered_;  // parallel to board cells
  std::vector<Placement> placements_;
  Index bad_moves_ = 0;
  Index max_bad_moves_ = 0;
  GameStatus status_ = GameStatus::InProgress;
};

inline GameSession new_session(const Board& b, Index max_bad_moves) { return GameSession("", b, max_bad_moves); }

}  // namespace bpm::domino
