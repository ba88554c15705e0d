#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mipforge {

// Minimal SHA-256, used for content digests (artifact, config, state).
class Sha256 {
  public:
    Sha256();
    void update(const void* data, size_t len);
    void update(std::string_view s) { update(s.data(), s.size()); }
    std::string hex_digest();  // finalizes; call once

  private:
    void process_block(const uint8_t* block);
    uint32_t state_[8];
    uint64_t bit_len_ = 0;
    uint8_t buffer_[64];
    size_t buffer_len_ = 0;
};

std::string sha256_hex(std::string_view data);
std::string sha256_hex(const std::vector<uint8_t>& data);

}  // namespace mipforge
