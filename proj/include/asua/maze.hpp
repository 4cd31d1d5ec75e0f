#pragma once

#include "asua/chain.hpp"
#include "asua/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace asua {

enum class Cell : char { Wall = '#', Open = '.', Target = 'T' };

struct MazeGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Cell> cells;  // row-major

  Cell at(std::size_t r, std::size_t c) const { return cells.at(r * cols + c); }
};

/// `#` wall, `.` open, `T` target, one text line per row; a trailing newline
/// is optional. Throws EmptyMaze, IllegalCharacter (1-based row:col),
/// RaggedRows, NoTarget.
MazeGrid parse_maze(std::string_view text);

struct MazeGraph {
  Graph graph;
  /// (row, col) of each vertex.
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  /// Vertex of each cell, row-major; nullopt for walls.
  std::vector<std::optional<VertexId>> vertex_of;
};

/// One vertex per non-wall cell, numbered row-major; edges join
/// 4-neighbors; targets absorb.
MazeGraph maze_to_graph(const MazeGrid& m);

/// Right-aligned grid of exact values: walls as `####`, absorbers as `0`.
std::string render_maze_asua(const MazeGrid& m, const MazeGraph& mg, const AsuaVector& t);

}  // namespace asua
