#include "totdk/limits.hpp"

#include <cstdlib>
#include <string>

#include "totdk/errors.hpp"

namespace totdk {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* raw = std::getenv("TOTDK_NAIVE_BOUND"); raw != nullptr && *raw != '\0') {
    const std::string text(raw);
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || value == 0 || text.front() == '-') {
      throw DomainError("TOTDK_NAIVE_BOUND must be a positive integer, got '" + text + "'");
    }
    limits.naive_dedekind = value;
  }
  return limits;
}

}  // namespace totdk
