// Copyright 2026 The trustac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "trustac/certificate.hpp"

#include <sodium.h>

#include <array>
#include <cstdio>
#include <stdexcept>

#include "trustac/error.hpp"

namespace trustac {

namespace {

void ensure_sodium() {
  static const bool ready = [] { return sodium_init() >= 0; }();
  if (!ready) throw std::runtime_error("libsodium failed to initialize");
}

std::string to_hex(const unsigned char* data, std::size_t len) {
  std::string out(len * 2 + 1, '\0');
  sodium_bin2hex(out.data(), out.size(), data, len);
  out.pop_back();
  return out;
}

// Fixed-precision text keeps the payload identical across runs and hosts.
std::string format_real(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

}  // namespace

std::string Certificate::canonical_payload() const {
  std::string p;
  p += "holder=" + holder.str() + "\n";
  p += "role=" + granted_role.str() + "\n";
  p += "resource=" + resource + "\n";
  p += "trust=" + format_real(trust_snapshot) + "\n";
  p += "issued_at=" + std::to_string(issued_at) + "\n";
  p += "expires_at=" + std::to_string(expires_at) + "\n";
  p += "issuer=" + issuer + "\n";
  return p;
}

CertificateAuthority::CertificateAuthority(DomainId issuer, std::string_view key_material)
    : issuer_(std::move(issuer)) {
  ensure_sodium();
  if (key_material.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "certificate authority " + issuer_ + " needs a key");
  }
  // Derive a fixed-size MAC key from arbitrary configured material.
  std::array<unsigned char, crypto_auth_hmacsha256_KEYBYTES> key{};
  crypto_generichash(key.data(), key.size(),
                     reinterpret_cast<const unsigned char*>(key_material.data()),
                     key_material.size(), nullptr, 0);
  key_.assign(reinterpret_cast<const char*>(key.data()), key.size());
}

std::string CertificateAuthority::sign(std::string_view payload) const {
  std::array<unsigned char, crypto_auth_hmacsha256_BYTES> mac{};
  crypto_auth_hmacsha256(mac.data(), reinterpret_cast<const unsigned char*>(payload.data()),
                         payload.size(), reinterpret_cast<const unsigned char*>(key_.data()));
  return to_hex(mac.data(), mac.size());
}

Certificate CertificateAuthority::issue(const EntityId& holder, const RoleId& role,
                                        const ResourceId& resource, double trust_snapshot,
                                        LogicalTime now, LogicalTime ttl) const {
  Certificate cert{holder, role, resource, trust_snapshot, now, now + ttl, issuer_, {}};
  cert.signature = sign(cert.canonical_payload());
  return cert;
}

bool CertificateAuthority::verify(const Certificate& cert, LogicalTime now) const {
  if (cert.issuer != issuer_) return false;
  const std::string expected = sign(cert.canonical_payload());
  if (expected.size() != cert.signature.size() ||
      sodium_memcmp(expected.data(), cert.signature.data(), expected.size()) != 0) {
    return false;
  }
  return cert.issued_at <= now && now < cert.expires_at;
}

std::string payload_digest(std::string_view payload) {
  ensure_sodium();
  std::array<unsigned char, crypto_generichash_BYTES_MIN> out{};
  crypto_generichash(out.data(), out.size(), reinterpret_cast<const unsigned char*>(payload.data()),
                     payload.size(), nullptr, 0);
  return to_hex(out.data(), 8);
}

}  // namespace trustac
