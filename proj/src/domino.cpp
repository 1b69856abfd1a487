#include "bpm/domino.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpm::domino {

std::string_view to_string(GameStatus s) {
  switch (s) {
    case GameStatus::InProgress: return "in_progress";
    case GameStatus::Won: return "won";
    case GameStatus::Lost: return "lost";
  }
  return "unknown";
}

Board Board::from_rows(const std::vector<std::string>& rows) {
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const char ch = rows[r][c];
      if (ch == '#') {
        cells.push_back({static_cast<int>(r), static_cast<int>(c)});
      } else if (ch != '.') {
        throw Error(ErrorCode::MalformedBoard, std::string("unexpected character '") + ch + "' in board row " +
                                                   std::to_string(r));
      }
    }
  }
  Board b = from_cells(std::move(cells));
  b.rows_ = std::max(b.rows_, static_cast<int>(rows.size()));
  for (const auto& row : rows) b.cols_ = std::max(b.cols_, static_cast<int>(row.size()));
  b.grid_.assign(static_cast<std::size_t>(b.rows_) * static_cast<std::size_t>(b.cols_), -1);
  for (std::size_t k = 0; k < b.cells_.size(); ++k) {
    const auto& c = b.cells_[k];
    b.grid_[static_cast<std::size_t>(c.row) * static_cast<std::size_t>(b.cols_) + static_cast<std::size_t>(c.col)] =
        static_cast<int>(k);
  }
  return b;
}

Board Board::from_cells(std::vector<Cell> cells) {
  Board b;
  for (const auto& c : cells) {
    if (c.row < 0 || c.col < 0) throw Error(ErrorCode::MalformedBoard, "negative cell coordinate");
    b.rows_ = std::max(b.rows_, c.row + 1);
    b.cols_ = std::max(b.cols_, c.col + 1);
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  b.cells_ = std::move(cells);
  b.grid_.assign(static_cast<std::size_t>(b.rows_) * static_cast<std::size_t>(b.cols_), -1);
  for (std::size_t k = 0; k < b.cells_.size(); ++k) {
    const auto& c = b.cells_[k];
    b.grid_[static_cast<std::size_t>(c.row) * static_cast<std::size_t>(b.cols_) + static_cast<std::size_t>(c.col)] =
        static_cast<int>(k);
  }
  b.validate();
  return b;
}

int Board::index_of(const Cell& c) const {
  if (c.row < 0 || c.col < 0 || c.row >= rows_ || c.col >= cols_) return -1;
  return grid_[static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c.col)];
}

std::vector<std::string> Board::to_rows() const {
  std::vector<std::string> out(static_cast<std::size_t>(rows_), std::string(static_cast<std::size_t>(cols_), '.'));
  for (const auto& c : cells_) out[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = '#';
  return out;
}

void Board::validate() const {
  if (cells_.empty()) throw Error(ErrorCode::InvalidBoard, "board has no cells");
  std::vector<char> seen(cells_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  constexpr int kDr[] = {-1, 0, 0, 1};
  constexpr int kDc[] = {0, -1, 1, 0};
  while (!stack.empty()) {
    const Cell c = cells_[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    for (int d = 0; d < 4; ++d) {
      const int k = index_of({c.row + kDr[d], c.col + kDc[d]});
      if (k < 0 || seen[static_cast<std::size_t>(k)]) continue;
      seen[static_cast<std::size_t>(k)] = 1;
      ++reached;
      stack.push_back(k);
    }
  }
  if (reached != cells_.size()) throw Error(ErrorCode::InvalidBoard, "board is not edge-connected");
}

BoardGraph board_to_graph(const Board& b) {
  BoardGraph out;
  out.node_of_cell.resize(b.cells().size());
  for (std::size_t k = 0; k < b.cells().size(); ++k) {
    const auto& c = b.cells()[k];
    auto& side = is_white(c) ? out.left_cells : out.right_cells;
    out.node_of_cell[k] = static_cast<Index>(side.size());
    side.push_back(c);
  }
  std::vector<Edge> edges;
  constexpr int kDr[] = {-1, 0, 0, 1};
  constexpr int kDc[] = {0, -1, 1, 0};
  for (Index l = 0; l < static_cast<Index>(out.left_cells.size()); ++l) {
    const Cell c = out.left_cells[static_cast<std::size_t>(l)];
    // Neighbors in row-major order, which is also ascending black-node order.
    for (int d = 0; d < 4; ++d) {
      const int k = b.index_of({c.row + kDr[d], c.col + kDc[d]});
      if (k >= 0) edges.push_back({l, out.node_of_cell[static_cast<std::size_t>(k)]});
    }
  }
  out.graph = build_graph(static_cast<Index>(out.left_cells.size()), static_cast<Index>(out.right_cells.size()),
                          std::move(edges));
  return out;
}

namespace {

DynamicState initial_state(const BoardGraph& g, std::size_t area) {
  if (g.left_cells.size() != g.right_cells.size()) {
    throw Error(ErrorCode::NotTileable, "board has " + std::to_string(g.left_cells.size()) + " white and " +
                                            std::to_string(g.right_cells.size()) + " black cells");
  }
  DynamicState state(g.graph);
  if (static_cast<std::size_t>(state.matching().size()) * 2 != area) {
    throw Error(ErrorCode::NotTileable, "board has no perfect tiling");
  }
  return state;
}

}  // namespace

GameSession::GameSession(std::string id, Board board, Index max_bad_moves)
    : id_(std::move(id)),
      board_(std::move(board)),
      graph_(board_to_graph(board_)),
      state_(initial_state(graph_, board_.cells().size())),
      covered_(board_.cells().size(), 0),
      max_bad_moves_(max_bad_moves) {
  if (max_bad_moves < 1) throw std::invalid_argument("max_bad_moves must be at least 1");
}

bool GameSession::covered(const Cell& c) const {
  const int k = board_.index_of(c);
  return k >= 0 && covered_[static_cast<std::size_t>(k)];
}

std::vector<Placement> GameSession::current_allowed() const {
  std::vector<Placement> out;
  if (status_ != GameStatus::InProgress) return out;
  const auto& g = state_.graph();
  for (Index id = 0; id < g.edge_count(); ++id) {
    if (!state_.classification().allowed(id)) continue;
    const auto& e = g.edge(id);
    out.emplace_back(graph_.cell_of(true, state_.left_origin(e.left)),
                     graph_.cell_of(false, state_.right_origin(e.right)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Placement> GameSession::allowed_moves() const {
  if (status_ != GameStatus::InProgress) throw Error(ErrorCode::GameOver, "game is over");
  return current_allowed();
}

MoveOutcome GameSession::apply_move(const Placement& p) {
  if (status_ != GameStatus::InProgress) throw Error(ErrorCode::GameOver, "game is over");
  const int ka = board_.index_of(p.first);
  const int kb = board_.index_of(p.second);
  if (ka < 0 || kb < 0) throw Error(ErrorCode::OffBoard, "placement leaves the board");
  if (!edge_adjacent(p.first, p.second)) throw Error(ErrorCode::NotAdjacent, "cells do not share an edge");
  if (covered_[static_cast<std::size_t>(ka)] || covered_[static_cast<std::size_t>(kb)]) {
    throw Error(ErrorCode::CellOccupied, "cell already covered");
  }

  const int kw = is_white(p.first) ? ka : kb;
  const int kk = is_white(p.first) ? kb : ka;
  const Index edge = state_.find_edge_by_origin(graph_.node_of_cell[static_cast<std::size_t>(kw)],
                                                graph_.node_of_cell[static_cast<std::size_t>(kk)]);

  MoveOutcome out;
  if (edge != kNone && state_.classification().allowed(edge)) {
    state_ = remove_allowed_edge(state_, state_.graph().edge(edge));
    covered_[static_cast<std::size_t>(ka)] = covered_[static_cast<std::size_t>(kb)] = 1;
    placements_.push_back(p);
    if (placements_.size() * 2 == board_.cells().size()) status_ = GameStatus::Won;
    out.accepted = true;
  } else {
    ++bad_moves_;
    if (bad_moves_ >= max_bad_moves_) status_ = GameStatus::Lost;
    out.reason = "blocks_completion";
  }
  out.bad_move_count = bad_moves_;
  out.max_bad_moves = max_bad_moves_;
  out.status = status_;
  out.placements = placements_;
  out.allowed_moves = current_allowed();
  return out;
}

}  // namespace bpm::domino
