#include "condenc/wire.hpp"

#include "condenc/bigint.hpp"
#include "condenc/errors.hpp"

namespace condenc {

Bytes serialize(const CondCiphertext& c) {
  Bytes out;
  put_u8(out, kWireVersion);
  put_u8(out, static_cast<std::uint8_t>(c.scheme));
  put_u8(out, c.flag);
  put_u32(out, static_cast<std::uint32_t>(c.values.size()));
  for (const auto& v : c.values) put_prefixed_int(out, v);
  if (c.ae) put_prefixed(out, *c.ae);
  return out;
}

CondCiphertext deserialize_ciphertext(std::span<const std::uint8_t> b) {
  ByteReader r(b);
  if (r.u8() != kWireVersion) throw MalformedError("unsupported ciphertext version");
  CondCiphertext c;
  const std::uint8_t id = r.u8();
  if (id < 1 || id > 5) throw MalformedError("unknown scheme id");
  c.scheme = static_cast<SchemeId>(id);
  c.flag = r.u8();
  if (c.flag > 1) throw MalformedError("flag must be 0 or 1");
  const std::uint32_t count = r.u32();
  // Each value needs at least its 4-byte length.
  if (count > r.remaining() / 4) throw MalformedError("value count exceeds input");
  c.values.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) c.values.push_back(r.prefixed_int());
  if (!r.done()) {
    auto ae = r.prefixed();
    c.ae = Bytes(ae.begin(), ae.end());
  }
  if (!r.done()) throw MalformedError("trailing bytes after ciphertext");
  return c;
}

}  // namespace condenc
