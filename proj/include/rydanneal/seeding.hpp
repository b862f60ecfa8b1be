#pragma once

#include <cstdint>
#include <string_view>

namespace rydanneal {

// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

// Seed of a sub-task, a pure function of (master seed, task path). Task
// paths look like "point/3/7" or "traj/12"; the result never depends on
// which worker runs the task or when.
std::uint64_t derive_seed(std::uint64_t master, std::string_view task_path);
std::uint64_t derive_seed(std::uint64_t master, std::string_view task_kind, std::uint64_t index);

}  // namespace rydanneal
