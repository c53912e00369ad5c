/*
 * Copyright 2026 The mavengraph Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "mavengraph/error.hpp"

namespace mavengraph {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MalformedCoordinates: return "MalformedCoordinates";
        case ErrorCode::UnknownScope: return "UnknownScope";
        case ErrorCode::EmptyVersion: return "EmptyVersion";
        case ErrorCode::MalformedRange: return "MalformedRange";
        case ErrorCode::CorruptPom: return "CorruptPom";
        case ErrorCode::SelfDependency: return "SelfDependency";
        case ErrorCode::UnknownArtifact: return "UnknownArtifact";
        case ErrorCode::ChainsNotBuilt: return "ChainsNotBuilt";
        case ErrorCode::ConsumerBusy: return "ConsumerBusy";
        case ErrorCode::SchemaMismatch: return "SchemaMismatch";
        case ErrorCode::RowError: return "RowError";
        case ErrorCode::ChainViolation: return "ChainViolation";
        case ErrorCode::Nontermination: return "Nontermination";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace mavengraph
