#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "cmreg/input.hpp"
#include "cmreg/oracle.hpp"
#include "cmreg/regularity.hpp"

namespace cmreg::cli {

enum class Command { compute, curve, oracle };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotGeneric = 3;
inline constexpr int kExitMismatch = 4;

struct Flags {
  Command command = Command::compute;
  bool json = false;
  bool verbose = false;
  bool monomial = false;
  std::optional<std::size_t> partial;
  std::optional<std::uint32_t> characteristic;
  RegularityOptions regularity;
};

using Json = nlohmann::ordered_json;

Json to_json(const ExtendedDegree& e);
Json to_json(const RegularityReport& report, std::optional<std::size_t> partial = std::nullopt);
Json to_json(const CurveReport& report);
Json to_json(const CrossCheck& check, bool verbose);

void print_text(std::ostream& out, const RegularityReport& report, const Ring& ring,
                std::optional<std::size_t> partial = std::nullopt);
void print_text(std::ostream& out, const CurveReport& report);
void print_text(std::ostream& out, const CrossCheck& check, bool verbose);

/// Runs one command on a parsed input and returns the exit code.
int run(const InputSpec& spec, const Flags& flags, std::ostream& out, std::ostream& err);

/// Parses `text` and runs; parse errors print to `err` and return kExitUsage.
int run_text(std::string_view text, const Flags& flags, std::ostream& out, std::ostream& err);

}  // namespace cmreg::cli
