#include "condenc/legacy_pke.hpp"

#include <memory>

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/evp.h>
#include <openssl/obj_mac.h>

#include "condenc/authenc.hpp"
#include "condenc/errors.hpp"

namespace condenc::legacy {

namespace {

struct Curve {
  EC_GROUP* group;
  BIGNUM* order;
  Curve() {
    group = EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1);
    order = BN_new();
    if (!group || !order || EC_GROUP_get_order(group, order, nullptr) != 1)
      throw Error("P-256 setup failed");
  }
  ~Curve() {
    EC_GROUP_free(group);
    BN_free(order);
  }
};

const Curve& curve() {
  static const Curve c;
  return c;
}

using BnPtr = std::unique_ptr<BIGNUM, decltype(&BN_clear_free)>;
using PointPtr = std::unique_ptr<EC_POINT, decltype(&EC_POINT_free)>;
using BnCtxPtr = std::unique_ptr<BN_CTX, decltype(&BN_CTX_free)>;

BnPtr bn_from(std::span<const std::uint8_t> b) {
  return BnPtr(BN_bin2bn(b.data(), static_cast<int>(b.size()), nullptr), &BN_clear_free);
}

// Uniform scalar in [1, order).
BnPtr random_scalar(Rng& rng) {
  for (;;) {
    Bytes b = rng.bytes(kScalarLen);
    BnPtr d = bn_from(b);
    if (!BN_is_zero(d.get()) && BN_cmp(d.get(), curve().order) < 0) return d;
  }
}

Bytes scalar_bytes(const BIGNUM* d) {
  Bytes out(kScalarLen);
  BN_bn2binpad(d, out.data(), static_cast<int>(out.size()));
  return out;
}

PointPtr mul_base(const BIGNUM* d, BN_CTX* ctx) {
  PointPtr p(EC_POINT_new(curve().group), &EC_POINT_free);
  if (!p || EC_POINT_mul(curve().group, p.get(), d, nullptr, nullptr, ctx) != 1)
    throw Error("EC scalar multiplication failed");
  return p;
}

Bytes encode_point(const EC_POINT* p, BN_CTX* ctx) {
  Bytes out(kPointLen);
  if (EC_POINT_point2oct(curve().group, p, POINT_CONVERSION_COMPRESSED, out.data(), out.size(),
                         ctx) != kPointLen)
    throw Error("EC point encoding failed");
  return out;
}

PointPtr decode_point(std::span<const std::uint8_t> b, BN_CTX* ctx) {
  PointPtr p(EC_POINT_new(curve().group), &EC_POINT_free);
  if (!p || b.size() != kPointLen ||
      EC_POINT_oct2point(curve().group, p.get(), b.data(), b.size(), ctx) != 1)
    return PointPtr(nullptr, &EC_POINT_free);
  return p;
}

AeKey derive_key(const EC_POINT* shared, std::span<const std::uint8_t> eph, BN_CTX* ctx) {
  BnPtr x(BN_new(), &BN_clear_free);
  if (EC_POINT_get_affine_coordinates(curve().group, shared, x.get(), nullptr, ctx) != 1)
    throw Error("EC affine conversion failed");
  static const char kDomain[] = "condenc legacy ecies v1";
  Bytes buf(kDomain, kDomain + sizeof(kDomain) - 1);
  Bytes xb = scalar_bytes(x.get());
  buf.insert(buf.end(), xb.begin(), xb.end());
  buf.insert(buf.end(), eph.begin(), eph.end());
  std::uint8_t digest[32];
  unsigned int len = 0;
  if (EVP_Digest(buf.data(), buf.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 failed");
  AeKey key;
  std::copy(digest, digest + key.size(), key.begin());
  return key;
}

}  // namespace

KeyPair keygen(Rng& rng) {
  BnCtxPtr ctx(BN_CTX_new(), &BN_CTX_free);
  BnPtr d = random_scalar(rng);
  PointPtr p = mul_base(d.get(), ctx.get());
  return KeyPair{encode_point(p.get(), ctx.get()), scalar_bytes(d.get())};
}

Bytes encrypt(std::span<const std::uint8_t> pk, std::span<const std::uint8_t> m, Rng& rng) {
  BnCtxPtr ctx(BN_CTX_new(), &BN_CTX_free);
  PointPtr recipient = decode_point(pk, ctx.get());
  if (!recipient) throw DomainError("invalid legacy public key");
  BnPtr e = random_scalar(rng);
  PointPtr eph = mul_base(e.get(), ctx.get());
  Bytes eph_bytes = encode_point(eph.get(), ctx.get());
  PointPtr shared(EC_POINT_new(curve().group), &EC_POINT_free);
  if (EC_POINT_mul(curve().group, shared.get(), nullptr, recipient.get(), e.get(), ctx.get()) != 1)
    throw Error("ECDH failed");
  Bytes out = eph_bytes;
  Bytes sealed = gcm_seal(derive_key(shared.get(), eph_bytes, ctx.get()), m, rng);
  out.insert(out.end(), sealed.begin(), sealed.end());
  return out;
}

std::optional<Bytes> decrypt(std::span<const std::uint8_t> sk, std::span<const std::uint8_t> c) {
  if (sk.size() != kScalarLen || c.size() < kOverhead) return std::nullopt;
  BnCtxPtr ctx(BN_CTX_new(), &BN_CTX_free);
  auto eph_bytes = c.first(kPointLen);
  PointPtr eph = decode_point(eph_bytes, ctx.get());
  if (!eph) return std::nullopt;
  BnPtr d = bn_from(sk);
  PointPtr shared(EC_POINT_new(curve().group), &EC_POINT_free);
  if (EC_POINT_mul(curve().group, shared.get(), nullptr, eph.get(), d.get(), ctx.get()) != 1)
    return std::nullopt;
  return gcm_open(derive_key(shared.get(), eph_bytes, ctx.get()), c.subspan(kPointLen));
}

bool matches(std::span<const std::uint8_t> sk, std::span<const std::uint8_t> pk) {
  if (sk.size() != kScalarLen) return false;
  BnCtxPtr ctx(BN_CTX_new(), &BN_CTX_free);
  BnPtr d = bn_from(sk);
  if (BN_is_zero(d.get()) || BN_cmp(d.get(), curve().order) >= 0) return false;
  return encode_point(mul_base(d.get(), ctx.get()).get(), ctx.get()) ==
         Bytes(pk.begin(), pk.end());
}

}  // namespace condenc::legacy
