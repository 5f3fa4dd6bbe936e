#include "cli/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <memory>
#include <sstream>

#include "mvrp/error.hpp"

namespace mvrp::cli {

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

std::string instance_digest(const Instance& inst) {
  std::ostringstream text;
  format_instance(inst, text);
  return sha256_hex(text.str());
}

std::string clustering_digest(const ClusterAssignment& clustering) {
  std::ostringstream text;
  text << clustering.k << '\n';
  for (std::size_t i = 0; i < clustering.city_ids.size(); ++i) {
    text << clustering.city_ids[i] << ' ' << clustering.labels[i] << '\n';
  }
  return sha256_hex(text.str()).substr(0, 16);
}

}  // namespace mvrp::cli
