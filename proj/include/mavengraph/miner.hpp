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
#pragma once

#include <cstdint>
#include <deque>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mavengraph/graph.hpp"
#include "mavengraph/io.hpp"
#include "mavengraph/pom.hpp"

namespace mavengraph {

using ConsumerId = std::size_t;
using MessageId = std::uint64_t;

enum class MessageState { Queued, InFlight, Acked };

struct MinerMessage {
    MessageId id = 0;
    Coordinates payload;
    std::uint32_t delivery_count = 0;
    MessageState state = MessageState::Queued;
    std::optional<ConsumerId> holder;  // set while InFlight
};

struct BrokerEvent {
    enum class Kind { Publish, Deliver, Ack, Requeue };
    Kind kind;
    MessageId message;
    ConsumerId consumer;  // 0 for Publish

    bool operator==(const BrokerEvent&) const = default;
};

// Work queue with acknowledgement. A message leaves for good only when its
// holder acks it; a requeued message goes to the tail. All members are
// atomic with respect to each other.
class BrokerQueue {
public:
    explicit BrokerQueue(bool record_trace = false) : tracing_(record_trace) {}
    BrokerQueue(const BrokerQueue&) = delete;
    BrokerQueue& operator=(const BrokerQueue&) = delete;

    MessageId publish(const Coordinates& payload);

    // Hands the oldest queued message to the consumer. Throws
    // Error(ConsumerBusy) when the consumer already holds one.
    std::optional<MinerMessage> deliver(ConsumerId consumer);

    // Throw Error(InvalidArgument) unless the consumer holds the message.
    void ack(ConsumerId consumer, MessageId id);
    void requeue(ConsumerId consumer, MessageId id);

    std::size_t queued() const;
    std::size_t in_flight() const;
    std::size_t acked() const;
    bool drained() const;

    MinerMessage message(MessageId id) const;
    std::vector<BrokerEvent> trace() const;

private:
    MinerMessage& held(ConsumerId consumer, MessageId id);

    mutable std::mutex mu_;
    std::deque<MessageId> queue_;
    std::map<MessageId, MinerMessage> messages_;
    std::map<ConsumerId, MessageId> holders_;
    std::size_t acked_ = 0;
    MessageId next_id_ = 1;
    bool tracing_;
    std::vector<BrokerEvent> trace_;
};

// One message per entry, in order, duplicates included.
std::size_t produce(const std::vector<Coordinates>& index, BrokerQueue& broker);

// One coordinate per line; blank lines and lines starting with '#' are
// skipped. Throws RowError.
std::vector<Coordinates> read_index(std::istream& in);

struct ResolvedArtifact {
    PomDocument doc;
    EpochMillis release_timestamp = 0;
};

// Coordinates -> POM and release time. Implementations must be safe to call
// from several threads.
class ResolveSource {
public:
    virtual ~ResolveSource() = default;
    virtual std::optional<ResolvedArtifact> fetch(const Coordinates& c) const = 0;
};

// Reads the directory layout of load_corpus. Unreadable entries are NotFound.
class CorpusSource final : public ResolveSource {
public:
    explicit CorpusSource(std::filesystem::path root) : root_(std::move(root)) {}
    std::optional<ResolvedArtifact> fetch(const Coordinates& c) const override;

private:
    std::filesystem::path root_;
};

class MemorySource final : public ResolveSource {
public:
    void add(const Coordinates& c, ResolvedArtifact artifact) { items_.insert_or_assign(c, std::move(artifact)); }
    std::optional<ResolvedArtifact> fetch(const Coordinates& c) const override;

private:
    std::map<Coordinates, ResolvedArtifact> items_;
};

// Where a consumer dies while handling a message. AfterArtifact leaves a
// node without its edges behind.
enum class CrashPoint { BeforeInsert, AfterArtifact, BeforeAck };

struct Crash {
    ConsumerId consumer = 0;
    std::size_t nth = 1;  // 1-based count of deliveries to that consumer
    CrashPoint point = CrashPoint::BeforeAck;

    auto operator<=>(const Crash&) const = default;
};

class FaultPlan {
public:
    FaultPlan() = default;
    explicit FaultPlan(std::vector<Crash> crashes);

    // `crashes` distinct entries with consumer < consumers and nth in
    // [1, max_nth], from a seeded generator.
    static FaultPlan random(std::uint64_t seed, std::size_t consumers, std::size_t crashes, std::size_t max_nth);

    std::optional<CrashPoint> crash_at(ConsumerId consumer, std::size_t nth) const;
    const std::vector<Crash>& crashes() const noexcept { return crashes_; }
    bool empty() const noexcept { return crashes_.empty(); }

private:
    std::vector<Crash> crashes_;
    std::map<std::pair<ConsumerId, std::size_t>, CrashPoint> index_;
};

enum class Schedule { RoundRobin, SeededRandom };

struct PipelineOptions {
    std::size_t consumers = 1;
    Schedule schedule = Schedule::RoundRobin;
    std::uint64_t seed = 0;
    FaultPlan faults;
    std::uint32_t max_deliveries = 10;
    // Real worker threads instead of the interleaving scheduler.
    bool threaded = false;
    bool record_trace = false;
};

struct ConsumerStats {
    std::size_t delivered = 0;
    std::size_t acked = 0;
    std::size_t crashed = 0;

    bool operator==(const ConsumerStats&) const = default;
};

// Tallies of applying POMs to a graph, shared by the pipeline and corpus ingestion.
struct ApplyStats {
    std::size_t inserted = 0;
    std::size_t duplicates_skipped = 0;   // first-delivery inserts of known coordinates
    std::size_t replayed_inserts = 0;     // re-inserts after a crash
    std::size_t skipped_not_found = 0;
    std::size_t skipped_corrupt = 0;      // unparsable POM or coordinates differing from the request
    std::size_t versionless_dependencies = 0;  // declarations without a usable version
    std::size_t self_dependencies = 0;
};

struct PipelineReport {
    std::size_t produced = 0;
    std::size_t acked = 0;
    std::size_t redeliveries = 0;
    std::size_t injected_crashes = 0;
    std::size_t next_edges = 0;
    ApplyStats apply;
    std::vector<ConsumerStats> consumers;
    std::vector<std::string> skipped;  // coordinates, sorted
    std::vector<BrokerEvent> trace;    // when requested
};

struct PipelineResult {
    DependencyGraph graph;
    PipelineReport report;
};

// Drains the index through `consumers` workers, then builds NEXT chains.
// Throws Error(InvalidArgument) for zero consumers and Error(Nontermination)
// when a message would exceed max_deliveries.
PipelineResult run_pipeline(const std::vector<Coordinates>& index, const ResolveSource& source,
                            const PipelineOptions& options = {});

struct IngestResult {
    DependencyGraph graph;
    ApplyStats apply;
    std::vector<CorpusFileError> errors;
};

// Every artifact directory in the corpus, in path order, then NEXT chains.
IngestResult ingest_corpus(const std::filesystem::path& root);

// Renders the report as `key=value` lines.
void write_report(std::ostream& out, const PipelineReport& report);
void write_report(std::ostream& out, const IngestResult& result);

}  // namespace mavengraph
