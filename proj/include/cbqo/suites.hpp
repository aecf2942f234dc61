#pragma once

// Named property suites. Each suite runs exhaustive and seeded random
// instances of one family of identities and reports the first minimal
// counterexample. Instance i draws from its own generator seeded by
// (seed, suite, i), so results do not depend on the worker count.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cbqo/json_io.hpp"

namespace cbqo::suites {

struct Config {
  std::uint64_t seed = 1;
  unsigned      jobs = 1;
  // Inverts every instance verdict; used to check that failures surface.
  bool corrupt = false;
  // Instance count for every seeded random part; each suite has its own default.
  std::optional<std::size_t> size;
};

struct Result {
  std::string                name;
  bool                       pass      = true;
  std::size_t                instances = 0;
  std::size_t                failures  = 0;
  std::optional<std::string> counterexample;
  io::json                   details = io::json::object();
};

const std::vector<std::string>& suite_names();
// Throws MalformedInput on an unknown suite name.
Result run_suite(std::string_view name, const Config& config);

std::uint64_t   splitmix64(std::uint64_t x);
std::mt19937_64 instance_rng(std::uint64_t seed, std::string_view salt, std::uint64_t index);

}  // namespace cbqo::suites
