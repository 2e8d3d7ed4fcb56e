#pragma once

// Naive reference for the quasigroup generator, written independently of the
// library: 1-based nested vectors, an explicit tempMatrix copy each cycle,
// a separate transpose matrix and a separate rotated stream. It follows the
// three-phase pseudocode line by line and shares no code with qgprng.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<int>>;  // index 0 unused in both dimensions

inline Grid one_based(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  Grid g(n + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) g[i][j] = static_cast<int>(rows[i - 1][j - 1]);
  return g;
}

struct Oracle {
  Grid q_group;
  Grid gen_matrix;
  int order;
  bool initialization = true;
  bool variable = false;
  long long shift_constant = 0;
  int x = 1, y = 1;

  int dot(int a, int b) const { return q_group[a][b]; }

  void phase1() {
    Grid temp_matrix;
    if (initialization) {
      temp_matrix = q_group;
    } else {
      temp_matrix = gen_matrix;
    }
    gen_matrix = Grid(order + 1, std::vector<int>(order + 1, 0));
    for (int i = 1; i <= order; ++i) {
      if (i < order) {
        for (int j = 1; j <= order; ++j) {
          if (j < order) {
            gen_matrix[i][j] = dot(temp_matrix[i][j], temp_matrix[i][j + 1]);
          } else if (j == order) {
            gen_matrix[i][j] = dot(temp_matrix[i][j], temp_matrix[i + 1][1]);
          }
        }
      } else if (i == order) {
        for (int j = 1; j <= order; ++j) {
          if (j < order) {
            gen_matrix[i][j] = dot(temp_matrix[i][j], temp_matrix[i][j + 1]);
          } else if (j == order) {
            gen_matrix[i][j] = dot(temp_matrix[i][j], temp_matrix[1][1]);
          }
        }
      }
    }
    initialization = false;
  }

  std::vector<int> phase2() const {
    std::vector<int> read;
    for (int i = 1; i <= order; ++i)
      for (int j = 1; j <= order; ++j) read.push_back(gen_matrix[i][j]);
    return read;
  }

  void phase3() {
    // 1. transpose
    Grid transposed(order + 1, std::vector<int>(order + 1, 0));
    for (int i = 1; i <= order; ++i)
      for (int j = 1; j <= order; ++j) transposed[i][j] = gen_matrix[j][i];
    gen_matrix = transposed;
    // 2. rows as one stream
    std::vector<int> stream;
    for (int i = 1; i <= order; ++i)
      for (int j = 1; j <= order; ++j) stream.push_back(gen_matrix[i][j]);
    // 3. variable shift from the transposed matrix
    const long long variable_shift = gen_matrix[x][y];
    // 4. rotate right: the element at position p lands at p + s
    const long long len = static_cast<long long>(stream.size());
    const long long s = (variable ? variable_shift : shift_constant) % len;
    std::vector<int> rotated(stream.size());
    for (long long p = 0; p < len; ++p) rotated[static_cast<std::size_t>((p + s) % len)] = stream[static_cast<std::size_t>(p)];
    // 5. refill row-wise from the left
    std::size_t k = 0;
    for (int i = 1; i <= order; ++i)
      for (int j = 1; j <= order; ++j) gen_matrix[i][j] = rotated[k++];
  }

  // PRNG loop: phase 1, read, phase 3.
  std::vector<int> run_blocks(int blocks) {
    std::vector<int> out;
    for (int b = 0; b < blocks; ++b) {
      phase1();
      const auto read = phase2();
      out.insert(out.end(), read.begin(), read.end());
      phase3();
    }
    return out;
  }
};

inline Oracle constant_shift(const std::vector<std::vector<std::int64_t>>& rows, long long k) {
  Oracle o;
  o.q_group = one_based(rows);
  o.order = static_cast<int>(rows.size());
  o.shift_constant = k;
  return o;
}

inline Oracle variable_shift(const std::vector<std::vector<std::int64_t>>& rows, int x, int y) {
  Oracle o = constant_shift(rows, 0);
  o.variable = true;
  o.x = x;
  o.y = y;
  return o;
}

}  // namespace oracle
