// Copyright 2026 The ventadd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ventadd/expr.h"

#include <bit>
#include <stdexcept>

#include "ventadd/errors.h"

namespace ventadd {

ClassicalExpr ClassicalExpr::record(uint32_t index) {
    if (index >= 64) {
        throw Error("record index out of range: " + std::to_string(index));
    }
    return {false, uint64_t{1} << index, 0};
}

ClassicalExpr ClassicalExpr::offset_bit(uint32_t index) {
    if (index >= 64) {
        throw Error("offset bit index out of range: " + std::to_string(index));
    }
    return {false, 0, uint64_t{1} << index};
}

bool ClassicalExpr::eval(uint64_t records, uint64_t offset_value) const {
    bool v = constant;
    v ^= std::popcount(records & record_mask) & 1;
    v ^= std::popcount(offset_value & offset_mask) & 1;
    return v;
}

ClassicalExpr ClassicalExpr::bind_offset_bits(uint64_t offset_value) const {
    bool folded = constant ^ (std::popcount(offset_value & offset_mask) & 1);
    return {folded, record_mask, 0};
}

std::string ClassicalExpr::str() const {
    std::string out;
    if (constant) {
        out = "1";
    }
    for (uint32_t i = 0; i < 64; i++) {
        if (record_mask >> i & 1) {
            if (!out.empty()) out += '^';
            out += 'r';
            out += std::to_string(i);
        }
    }
    for (uint32_t k = 0; k < 64; k++) {
        if (offset_mask >> k & 1) {
            if (!out.empty()) out += '^';
            out += 'd';
            out += std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

ClassicalExpr ClassicalExpr::parse(const std::string &text) {
    ClassicalExpr result;
    size_t pos = 0;
    if (text.empty()) {
        throw SerializationError("empty expression");
    }
    while (pos < text.size()) {
        size_t end = text.find('^', pos);
        if (end == std::string::npos) end = text.size();
        std::string term = text.substr(pos, end - pos);
        if (term == "0") {
            // no-op term
        } else if (term == "1") {
            result.constant = !result.constant;
        } else if (term.size() >= 2 && (term[0] == 'r' || term[0] == 'd')) {
            uint32_t index;
            try {
                size_t used;
                index = std::stoul(term.substr(1), &used);
                if (used != term.size() - 1) throw std::invalid_argument(term);
            } catch (const std::exception &) {
                throw SerializationError("bad expression term: " + term);
            }
            result = result ^ (term[0] == 'r' ? record(index) : offset_bit(index));
        } else {
            throw SerializationError("bad expression term: " + term);
        }
        pos = end + 1;
    }
    return result;
}

}  // namespace ventadd
