// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <array>
#include <random>
#include <sstream>

#include "lofamo/error.hpp"
#include "lofamo/registers/register_file.hpp"
#include "lofamo/registers/status_registers.hpp"
#include "lofamo/registers/temperature.hpp"

namespace lofamo::registers {
namespace {

// Reference layout, written out field by field from the register drawings.
struct Field {
  unsigned lsb;
  unsigned width;
};

constexpr Field kValid{0, 1};
constexpr Field host_fail(unsigned d) { return {1 + d, 1}; }
constexpr Field kCore{7, 2};
constexpr Field kPower{9, 2};
constexpr Field kVoltage{11, 2};
constexpr Field kTemp{13, 2};
constexpr Field link_field(unsigned d) { return {15 + 2 * d, 2}; }

std::uint32_t put(std::uint32_t w, Field f, unsigned v) {
  const std::uint32_t m = ((1u << f.width) - 1) << f.lsb;
  return (w & ~m) | ((v << f.lsb) & m);
}
unsigned get(std::uint32_t w, Field f) { return (w >> f.lsb) & ((1u << f.width) - 1); }

struct RefDnp {
  unsigned valid, core, power, voltage, temp;
  std::array<unsigned, 6> fail, link;
};

std::uint32_t ref_pack(const RefDnp& r) {
  std::uint32_t w = 0;
  w = put(w, kValid, r.valid);
  for (unsigned d = 0; d < 6; ++d) w = put(w, host_fail(d), r.fail[d]);
  w = put(w, kCore, r.core);
  w = put(w, kPower, r.power);
  w = put(w, kVoltage, r.voltage);
  w = put(w, kTemp, r.temp);
  for (unsigned d = 0; d < 6; ++d) w = put(w, link_field(d), r.link[d]);
  return w;
}

DnpWatchdogRegister to_struct(const RefDnp& r) {
  DnpWatchdogRegister s;
  s.valid = r.valid;
  s.core = static_cast<CoreStatus>(r.core);
  s.power = static_cast<AlertState>(r.power);
  s.voltage = static_cast<AlertState>(r.voltage);
  s.temperature = static_cast<AlertState>(r.temp);
  for (unsigned d = 0; d < 6; ++d) {
    s.neighbor_host_fail[d] = r.fail[d];
    s.link[d] = static_cast<TriState>(r.link[d]);
  }
  return s;
}

bool ref_dnp_legal(std::uint32_t w) {
  if (w >> 27) return false;
  for (Field f : {kCore, kPower, kVoltage, kTemp}) {
    if (get(w, f) == 3) return false;
  }
  for (unsigned d = 0; d < 6; ++d) {
    if (get(w, link_field(d)) == 3) return false;
  }
  return true;
}

TEST(DnpWatchdog, RandomizedFieldsMatchReferencePacker) {
  std::mt19937_64 gen(1234);
  std::uniform_int_distribution<unsigned> bit(0, 1), code(0, 2);
  for (int i = 0; i < 100000; ++i) {
    RefDnp r{bit(gen), code(gen), code(gen), code(gen), code(gen), {}, {}};
    for (unsigned d = 0; d < 6; ++d) {
      r.fail[d] = bit(gen);
      r.link[d] = code(gen);
    }
    const auto s = to_struct(r);
    const std::uint32_t w = ref_pack(r);
    ASSERT_EQ(encode_dnp_wd(s), w);
    ASSERT_EQ(decode_dnp_wd(w), s);
  }
}

TEST(DnpWatchdog, RandomWordsDecodeExactlyWhenLegal) {
  std::mt19937_64 gen(99);
  for (int i = 0; i < 100000; ++i) {
    std::uint32_t w = static_cast<std::uint32_t>(gen());
    if (i % 2) w &= kDnpWdMask;
    if (ref_dnp_legal(w)) {
      ASSERT_EQ(encode_dnp_wd(decode_dnp_wd(w)), w);
    } else {
      ASSERT_THROW(decode_dnp_wd(w), IllegalEncoding) << std::hex << w;
    }
  }
}

TEST(DnpWatchdog, IllegalCodeNamesTheField) {
  try {
    decode_dnp_wd(0x00006000);
    FAIL();
  } catch (const IllegalEncoding& e) {
    EXPECT_EQ(e.field(), "temperature");
    EXPECT_STREQ(e.what(), "temperature field illegal code 11");
  }
  EXPECT_THROW(decode_dnp_wd(3u << 15), IllegalEncoding);
  EXPECT_THROW(decode_dnp_wd(1u << 27), IllegalEncoding);
}

TEST(DnpWatchdog, Mask) { EXPECT_EQ(kDnpWdMask, 0x07ffffffu); }

TEST(HostWatchdog, ExhaustiveOverNineBits) {
  int legal = 0;
  for (std::uint32_t w = 0; w < 512; ++w) {
    bool ok = true;
    for (unsigned f = 0; f < 4; ++f) ok &= ((w >> (1 + 2 * f)) & 3u) != 3u;
    if (!ok) {
      EXPECT_THROW(decode_host_wd(w), IllegalEncoding);
      continue;
    }
    ++legal;
    const auto r = decode_host_wd(w);
    EXPECT_EQ(r.valid, (w & 1u) != 0);
    EXPECT_EQ(static_cast<unsigned>(r.service_net), (w >> 1) & 3u);
    EXPECT_EQ(static_cast<unsigned>(r.memory), (w >> 3) & 3u);
    EXPECT_EQ(static_cast<unsigned>(r.peripheral0), (w >> 5) & 3u);
    EXPECT_EQ(static_cast<unsigned>(r.peripheral1), (w >> 7) & 3u);
    EXPECT_EQ(encode_host_wd(r), w);
  }
  EXPECT_EQ(legal, 2 * 81);
  EXPECT_THROW(decode_host_wd(1u << 9), IllegalEncoding);
}

TEST(RemoteFault, RandomRoundTrip) {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 100000; ++i) {
    const std::uint32_t w = static_cast<std::uint32_t>(gen()) & 0x00ffffffu;
    const auto r = decode_remote_fault(w);
    for (unsigned d = 0; d < 6; ++d) {
      const unsigned nib = (w >> (4 * d)) & 0xfu;
      ASSERT_EQ(r.dir[d].service_net, (nib & 1u) != 0);
      ASSERT_EQ(r.dir[d].memory, (nib & 2u) != 0);
      ASSERT_EQ(r.dir[d].peripheral0, (nib & 4u) != 0);
      ASSERT_EQ(r.dir[d].peripheral1, (nib & 8u) != 0);
      ASSERT_EQ(r.dir[d].nibble(), nib);
    }
    ASSERT_EQ(encode_remote_fault(r), w);
  }
  EXPECT_THROW(decode_remote_fault(0x01000000u), IllegalEncoding);
}

TEST(Temperature, TableRows) {
  const std::pair<std::uint8_t, int> rows[] = {
      {0xFF, 127}, {0xE4, 100}, {0xD5, 85},  {0xD0, 80},  {0xB2, 50},  {0x9E, 30},  {0x8A, 10},
      {0x80, 0},   {0x76, -10}, {0x6C, -20}, {0x62, -30}, {0x4E, -50}, {0x3A, -70}};
  for (auto [raw, c] : rows) {
    EXPECT_EQ(temp_decode(raw), c) << int(raw);
    EXPECT_EQ(temp_encode(c), raw) << c;
  }
}

TEST(Temperature, RangeAndBijection) {
  for (int raw = 0; raw < 256; ++raw) {
    EXPECT_EQ(temp_encode(temp_decode(static_cast<std::uint8_t>(raw))), raw);
  }
  EXPECT_THROW(temp_encode(128), OutOfRange);
  EXPECT_THROW(temp_encode(-129), OutOfRange);
}

TEST(Temperature, ThresholdPacking) {
  const Thresholds t{{-10, 0, 70, 85}};
  const Word w = pack_temperature_thresholds(t);
  EXPECT_EQ(w, 0xD5C68076u);  // bytes 76 80 C6 D5, lowest boundary first
  EXPECT_EQ(unpack_temperature_thresholds(w).bound, t.bound);
  const Thresholds raw{{10, 20, 180, 220}};
  EXPECT_EQ(pack_raw_thresholds(raw), 0xDCB4140Au);
  EXPECT_EQ(unpack_raw_thresholds(0xDCB4140Au).bound, raw.bound);
  EXPECT_THROW(pack_raw_thresholds(Thresholds{{0, 1, 2, 256}}), OutOfRange);
}

TEST(RegisterMap, AddressesAndMasks) {
  const std::pair<Address, Word> expect[] = {
      {0x008, 0xff},  {0x0c0, 0xfff},       {0x140, 0xffffffff}, {0x144, 0x3fff},
      {0x240, 0xff},  {0x440, 0xff},        {0x540, 0xff},       {0x640, 0xff},
      {0x740, 0xff},  {0x840, 0xff},        {0x940, 0xff},       {0xec0, 0x07ffffff},
      {0xec4, 0x1ff}, {0xec8, 0x00ffffff},  {0xf00, 0xffffffff}, {0xf40, 0xff}};
  for (auto [a, m] : expect) {
    const auto* info = find_register(a);
    ASSERT_NE(info, nullptr) << std::hex << a;
    EXPECT_EQ(info->mask, m) << std::hex << a;
  }
  for (std::size_t i = 1; i < register_map().size(); ++i) {
    EXPECT_LT(register_map()[i - 1].address, register_map()[i].address);
  }
  EXPECT_EQ(channel_exception_address(Direction::XPlus), 0x440u);
  EXPECT_EQ(channel_exception_address(Direction::ZMinus), 0x940u);
}

TEST(RegisterFile, StrictAndLaxMasks) {
  RegisterFile strict(true), lax(false);
  EXPECT_THROW(strict.write(addr::kHostWatchdog, 0x200), MaskViolation);
  lax.write(addr::kHostWatchdog, 0x3ff);
  EXPECT_EQ(lax.read(addr::kHostWatchdog), 0x1ffu);
  EXPECT_THROW(strict.read(0x004), UnmappedAddress);
  EXPECT_THROW(strict.write(0xffc, 1), UnmappedAddress);
}

TEST(RegisterFile, DumpRoundTrip) {
  RegisterFile rf;
  rf.write(addr::kDnpWatchdog, 0x00000001);
  rf.write(addr::kTemperature, 0xE4);
  std::stringstream ss;
  write_dump(ss, rf);
  EXPECT_NE(ss.str().find("00000ec0: 00000001\n"), std::string::npos);
  const auto parsed = parse_dump(ss);
  EXPECT_EQ(parsed, rf.entries());
  std::istringstream bad("00000ec0 00000001\n");
  EXPECT_THROW(parse_dump(bad), Error);
}

}  // namespace
}  // namespace lofamo::registers
