#pragma once

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcache/alcache.hpp"

namespace alcache::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kInput = 2 };

/// Usage problem detected after CLI11 parsing (bad list value etc.).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::vector<RetrievalStrategy> parse_strategies(const std::string& s) {
  std::vector<RetrievalStrategy> out;
  for (const auto& item : split_list(s)) {
    auto v = parse_strategy(item);
    if (!v) throw UsageError("unknown strategy '" + item + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw UsageError("no strategies given");
  return out;
}

inline std::vector<EvictionPolicy> parse_policies(const std::string& s) {
  std::vector<EvictionPolicy> out;
  for (const auto& item : split_list(s)) {
    auto v = parse_policy(item);
    if (!v) throw UsageError("unknown policy '" + item + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw UsageError("no policies given");
  return out;
}

inline double parse_fraction(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(v > 0.0) || v > 1.0) {
    throw UsageError("capacity fraction must be in (0, 1]: '" + s + "'");
  }
  return v;
}

/// "0.1,0.5,1.0" or a range "0.1..1.0" stepping by 0.1.
inline std::vector<double> parse_fractions(const std::string& s) {
  std::vector<double> out;
  if (auto dots = s.find(".."); dots != std::string::npos) {
    const auto lo = static_cast<int>(std::lround(parse_fraction(s.substr(0, dots)) * 10));
    const auto hi = static_cast<int>(std::lround(parse_fraction(s.substr(dots + 2)) * 10));
    if (lo > hi) throw UsageError("empty fraction range '" + s + "'");
    for (int t = lo; t <= hi; ++t) out.push_back(t / 10.0);
  } else {
    for (const auto& item : split_list(s)) out.push_back(parse_fraction(item));
  }
  if (out.empty()) throw UsageError("no capacity fractions given");
  return out;
}

inline std::vector<bool> parse_warm(const std::string& s) {
  if (s == "both") return {false, true};
  if (s == "on") return {true};
  if (s == "off") return {false};
  throw UsageError("--warm must be one of both|on|off");
}

inline std::string kb_name_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

/// Runs `body`, mapping failures onto the documented exit codes.
template <class Body>
int guarded(Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const KbError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace alcache::cli
