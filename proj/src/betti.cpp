#include "chowforge/betti.hpp"

#include <algorithm>
#include <sstream>

namespace chowforge {

long BettiTable::total(int i) const {
  long s = 0;
  for (int j = 0; j <= j_max; ++j) s += at(i, j);
  return s;
}

std::optional<std::pair<int, int>> BettiTable::first_nonlinear() const {
  for (int i = 0; i <= i_max; ++i)
    for (int j = 0; j <= j_max; ++j)
      if (j != i && at(i, j) != 0) return std::make_pair(i, j);
  return std::nullopt;
}

std::string BettiTable::to_text() const {
  // rows r = j - i that can hold a nonzero entry
  int rmax = 0;
  for (int i = 0; i <= i_max; ++i)
    for (int j = 0; j <= j_max; ++j)
      if (at(i, j) != 0) rmax = std::max(rmax, j - i);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""};
  for (int i = 0; i <= i_max; ++i) head.push_back(std::to_string(i));
  cells.push_back(head);
  std::vector<std::string> tot{"total:"};
  for (int i = 0; i <= i_max; ++i) tot.push_back(std::to_string(total(i)));
  cells.push_back(tot);
  if (j_max > 0) rmax = std::max(rmax, 1);
  for (int r = 0; r <= rmax; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= i_max; ++i) {
      int j = i + r;
      if (j > j_max) row.push_back("?");
      else if (at(i, j) == 0) row.push_back(".");
      else row.push_back(std::to_string(at(i, j)));
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace chowforge
