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


#pragma once

#include <string>
#include <string_view>

#include "trustac/types.hpp"

namespace trustac {

/// Capability token handed to an entity after a permitted request. The
/// signature is a keyed digest (HMAC-SHA-256) of canonical_payload() under
/// the issuer's key; it is an integrity check, not a PKI signature.
struct Certificate {
  EntityId holder;
  RoleId granted_role;
  ResourceId resource;
  double trust_snapshot = 0.0;
  LogicalTime issued_at = 0;
  LogicalTime expires_at = 0;
  DomainId issuer;
  std::string signature;  // lowercase hex

  std::string canonical_payload() const;
};

class CertificateAuthority {
 public:
  CertificateAuthority(DomainId issuer, std::string_view key_material);

  const DomainId& issuer() const noexcept { return issuer_; }

  Certificate issue(const EntityId& holder, const RoleId& role, const ResourceId& resource,
                    double trust_snapshot, LogicalTime now, LogicalTime ttl) const;

  /// True iff the certificate was issued by this authority, is untampered,
  /// and issued_at <= now < expires_at.
  bool verify(const Certificate& cert, LogicalTime now) const;

 private:
  std::string sign(std::string_view payload) const;

  DomainId issuer_;
  std::string key_;  // 32 raw bytes
};

/// Short stable digest (first 8 bytes of BLAKE2b, hex) for trace payloads.
std::string payload_digest(std::string_view payload);

}  // namespace trustac
