#pragma once

#include <cstdint>

namespace pinchnet {

/// SplitMix64 finalizer; derives well-separated seeds for substreams
/// (per-sample channel draws, per-trial experiment streams).
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace pinchnet
