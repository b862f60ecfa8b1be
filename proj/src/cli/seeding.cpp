#include "rydanneal/seeding.hpp"

#include <string>

namespace rydanneal {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view task_path) {
  // FNV-1a over the path, then mixed together with the master seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : task_path) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(mix64(master) ^ h);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view task_kind, std::uint64_t index) {
  std::string path(task_kind);
  path += '/';
  path += std::to_string(index);
  return derive_seed(master, path);
}

}  // namespace rydanneal
