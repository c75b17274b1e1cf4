#include "zelchar/qchar.hpp"

namespace zelchar {

FundamentalSpec::FundamentalSpec(int level, int power, int rank) : level_(level), power_(power), rank_(rank) {
  if (rank < 1) throw Error(ErrorKind::RankExceeded, "rank must be at least 1");
  if (level < 1) throw Error(ErrorKind::InvalidSegment, "level must be at least 1");
  if (level > rank) {
    throw Error(ErrorKind::RankExceeded, "level " + std::to_string(level) + " exceeds rank " + std::to_string(rank));
  }
  if ((level + power) % 2 == 0) {
    throw Error(ErrorKind::InvalidSegment, "level + power must be odd on the integral lattice");
  }
}

FundamentalSpec FundamentalSpec::from_segment(const Segment& seg, int rank) {
  const DrinfeldVar y = to_drinfeld(seg);
  return FundamentalSpec(y.level, y.power, rank);
}

}  // namespace zelchar
