#include "asua/maze.hpp"

#include "asua/error.hpp"

#include <algorithm>

namespace asua {

MazeGrid parse_maze(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.empty() || lines.front().empty()) throw Error(ErrorKind::EmptyMaze, "maze has no cells");

  MazeGrid m;
  m.rows = lines.size();
  m.cols = lines.front().size();
  bool target = false;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    for (std::size_t c = 0; c < lines[r].size(); ++c) {
      const char ch = lines[r][c];
      if (ch != '#' && ch != '.' && ch != 'T')
        throw Error(ErrorKind::IllegalCharacter, "'" + std::string(1, ch) + "' at " +
                                                     std::to_string(r + 1) + ":" + std::to_string(c + 1));
      target |= ch == 'T';
      m.cells.push_back(static_cast<Cell>(ch));
    }
    if (lines[r].size() != m.cols)
      throw Error(ErrorKind::RaggedRows, "row " + std::to_string(r + 1) + " has " +
                                             std::to_string(lines[r].size()) + " cells, expected " +
                                             std::to_string(m.cols));
  }
  if (!target) throw Error(ErrorKind::NoTarget, "maze has no 'T' cell");
  return m;
}

MazeGraph maze_to_graph(const MazeGrid& m) {
  MazeGraph out;
  out.vertex_of.assign(m.cells.size(), std::nullopt);
  std::vector<VertexId> absorbing;
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) {
      const Cell cell = m.at(r, c);
      if (cell == Cell::Wall) continue;
      const VertexId v = out.coords.size();
      out.vertex_of[r * m.cols + c] = v;
      out.coords.emplace_back(r, c);
      if (cell == Cell::Target) absorbing.push_back(v);
    }

  std::vector<EdgeSpec> edges;
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) {
      const auto& here = out.vertex_of[r * m.cols + c];
      if (!here) continue;
      if (c + 1 < m.cols)
        if (const auto& right = out.vertex_of[r * m.cols + c + 1]) edges.push_back({*here, *right, 1});
      if (r + 1 < m.rows)
        if (const auto& down = out.vertex_of[(r + 1) * m.cols + c]) edges.push_back({*here, *down, 1});
    }
  out.graph = build_graph(out.coords.size(), edges, absorbing);
  return out;
}

std::string render_maze_asua(const MazeGrid& m, const MazeGraph& mg, const AsuaVector& t) {
  std::vector<std::string> text(m.cells.size());
  std::size_t width = 4;
  for (std::size_t i = 0; i < m.cells.size(); ++i) {
    const auto& v = mg.vertex_of[i];
    if (!v)
      text[i] = "####";
    else if (mg.graph.is_absorbing(*v))
      text[i] = "0";
    else
      text[i] = format_compact(t[*v]);
    width = std::max(width, text[i].size());
  }
  std::string out;
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      const auto& s = text[r * m.cols + c];
      if (c > 0) out += ' ';
      out.append(width - s.size(), ' ');
      out += s;
    }
    out += '\n';
  }
  return out;
}

}  // namespace asua
