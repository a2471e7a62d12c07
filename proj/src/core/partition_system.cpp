#include "conglab/partition_system.hpp"

#include <stdexcept>

namespace conglab {

PartitionSystem generate_partition_system(int n) {
  if (n < 3 || n > 7) throw std::invalid_argument("N must lie in 3..7");
  PartitionSystem out;
  out.n = n;
  std::vector<int> s(static_cast<std::size_t>(n - 2), 1);
  while (true) {
    out.sequences.push_back(s);
    int pos = n - 3;
    while (pos >= 0 && s[static_cast<std::size_t>(pos)] == pos + 3) s[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++s[static_cast<std::size_t>(pos)];
  }
  const int r = static_cast<int>(out.sequences.size());
  auto where = [&](int j, int i) {
    PieceMask m(r);
    for (int k = 0; k < r; ++k)
      if (out.sequences[static_cast<std::size_t>(k)][static_cast<std::size_t>(j - 3)] == i) m.set(k + 1);
    return m;
  };
  out.system = CongruenceSystem(r);
  const PieceMask base = where(n, 1);
  for (int j = 3; j <= n; ++j)
    for (int i = 1; i <= j; ++i) {
      if (i == 1 && j == n) continue;
      out.system.add(base, where(j, i));
      out.pairs.emplace_back(i, j);
    }
  return out;
}

}  // namespace conglab
