// Copyright 2026 The nongauss Authors
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

#ifndef NONGAUSS_PHILOX_H
#define NONGAUSS_PHILOX_H

#include <array>
#include <cstdint>

namespace nongauss {

/// Philox4x32-10 counter-based generator.
///
/// Every output block is a pure function of (key, counter), so shot i of a simulation can
/// be drawn on any thread without shared state.
class Philox4x32 {
   public:
    using Block = std::array<uint32_t, 4>;
    using Key = std::array<uint32_t, 2>;

    explicit Philox4x32(Key key) : key_(key) {
    }
    static Philox4x32 from_seed(uint64_t seed) {
        return Philox4x32({static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)});
    }

    Block operator()(Block counter) const {
        Key k = key_;
        for (int round = 0; round < 10; round++) {
            if (round > 0) {
                k[0] += 0x9E3779B9u;
                k[1] += 0xBB67AE85u;
            }
            uint64_t p0 = uint64_t{0xD2511F53u} * counter[0];
            uint64_t p1 = uint64_t{0xCD9E8D57u} * counter[2];
            counter = {static_cast<uint32_t>(p1 >> 32) ^ counter[1] ^ k[0], static_cast<uint32_t>(p1),
                       static_cast<uint32_t>(p0 >> 32) ^ counter[3] ^ k[1], static_cast<uint32_t>(p0)};
        }
        return counter;
    }

    /// Block for draw `index` of stream `stream`.
    Block at(uint64_t index, uint32_t stream = 0) const {
        return (*this)({static_cast<uint32_t>(index), static_cast<uint32_t>(index >> 32), stream, 0});
    }

    /// Two uniforms in [0, 1) with 53 random bits each, drawn from one block.
    std::array<double, 2> uniforms(uint64_t index, uint32_t stream = 0) const {
        Block b = at(index, stream);
        return {to_unit(b[0], b[1]), to_unit(b[2], b[3])};
    }

    static double to_unit(uint32_t hi, uint32_t lo) {
        uint64_t bits = (uint64_t{hi} << 32 | lo) >> 11;
        return static_cast<double>(bits) * 0x1.0p-53;
    }

   private:
    Key key_;
};

}  // namespace nongauss

#endif
