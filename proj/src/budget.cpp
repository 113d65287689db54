#include "bpe/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "bpe/error.hpp"

namespace bpe {

Budget Budget::parse(std::string_view spec) {
  Budget b;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw DomainError("BPE_BUDGET item without '=': " + std::string(item));
    std::string_view key = item.substr(0, eq);
    std::string_view val = item.substr(eq + 1);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), n);
    if (ec != std::errc() || ptr != val.data() + val.size())
      throw DomainError("BPE_BUDGET value is not a number: " + std::string(item));
    if (key == "arrows") b.max_arrows = n;
    else if (key == "minor_edges") b.minor_max_edges = n;
    else if (key == "survey_vertices") b.survey_max_vertices = n;
    else if (key == "survey_edges") b.survey_max_edges = n;
    else throw DomainError("unknown BPE_BUDGET key: " + std::string(key));
  }
  return b;
}

const Budget& Budget::current() {
  static const Budget b = [] {
    const char* env = std::getenv("BPE_BUDGET");
    return env ? parse(env) : Budget{};
  }();
  return b;
}

}  // namespace bpe
