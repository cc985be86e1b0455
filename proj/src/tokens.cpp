#include "darwin/tokens.hpp"

#include <cctype>

#include "darwin/common.hpp"

namespace darwin {
namespace {

bool is_space_byte(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

class WhitespaceCounter final : public TokenCounter {
  public:
    const std::string& id() const override {
        static const std::string kId = "whitespace";
        return kId;
    }

    int64_t count(std::string_view text) const override {
        int64_t n = 0;
        bool in_run = false;
        for (unsigned char c : text) {
            if (is_space_byte(c)) {
                in_run = false;
            } else if (!in_run) {
                in_run = true;
                ++n;
            }
        }
        return n;
    }
};

class ByteCounter final : public TokenCounter {
  public:
    const std::string& id() const override {
        static const std::string kId = "bytes";
        return kId;
    }

    int64_t count(std::string_view text) const override {
        return static_cast<int64_t>(text.size());
    }
};

}  // namespace

const TokenCounter& counter_for(const std::string& counter_id) {
    static const WhitespaceCounter whitespace;
    static const ByteCounter bytes;
    if (counter_id == whitespace.id()) return whitespace;
    if (counter_id == bytes.id()) return bytes;
    throw Error(errc::unknown_counter, counter_id);
}

int64_t count_tokens(std::string_view text) {
    return counter_for(kDefaultCounterId).count(text);
}

}  // namespace darwin
