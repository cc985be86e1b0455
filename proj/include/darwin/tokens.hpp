#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace darwin {

// Token counters are the pipeline's unit of account. Budgets, quotas, and
// loss-mask indices are all expressed in one counter's units, and every
// manifest declares which counter measured it.
class TokenCounter {
  public:
    virtual ~TokenCounter() = default;
    virtual const std::string& id() const = 0;
    virtual int64_t count(std::string_view text) const = 0;
};

inline constexpr const char* kDefaultCounterId = "whitespace";

// Registry lookup; throws UnknownCounter. Built-ins: "whitespace"
// (maximal non-whitespace runs) and "bytes".
const TokenCounter& counter_for(const std::string& counter_id);

// Default counter shortcut.
int64_t count_tokens(std::string_view text);

}  // namespace darwin
