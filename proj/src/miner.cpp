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
#include "mavengraph/miner.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <ostream>
#include <random>
#include <thread>

#include "mavengraph/error.hpp"
#include "text_util.hpp"

namespace mavengraph {

// ---- broker ---------------------------------------------------------------

MessageId BrokerQueue::publish(const Coordinates& payload) {
    std::lock_guard lock(mu_);
    const MessageId id = next_id_++;
    messages_.emplace(id, MinerMessage{id, payload, 0, MessageState::Queued, std::nullopt});
    queue_.push_back(id);
    if (tracing_) trace_.push_back({BrokerEvent::Kind::Publish, id, 0});
    return id;
}

std::optional<MinerMessage> BrokerQueue::deliver(ConsumerId consumer) {
    std::lock_guard lock(mu_);
    if (auto it = holders_.find(consumer); it != holders_.end()) {
        throw Error(ErrorCode::ConsumerBusy, "consumer " + std::to_string(consumer) + " already holds message " +
                                                 std::to_string(it->second));
    }
    if (queue_.empty()) return std::nullopt;
    const MessageId id = queue_.front();
    queue_.pop_front();
    MinerMessage& m = messages_.at(id);
    m.state = MessageState::InFlight;
    m.holder = consumer;
    ++m.delivery_count;
    holders_.emplace(consumer, id);
    if (tracing_) trace_.push_back({BrokerEvent::Kind::Deliver, id, consumer});
    return m;
}

MinerMessage& BrokerQueue::held(ConsumerId consumer, MessageId id) {
    auto it = holders_.find(consumer);
    if (it == holders_.end() || it->second != id) {
        throw Error(ErrorCode::InvalidArgument,
                    "consumer " + std::to_string(consumer) + " does not hold message " + std::to_string(id));
    }
    holders_.erase(it);
    MinerMessage& m = messages_.at(id);
    m.holder.reset();
    return m;
}

void BrokerQueue::ack(ConsumerId consumer, MessageId id) {
    std::lock_guard lock(mu_);
    held(consumer, id).state = MessageState::Acked;
    ++acked_;
    if (tracing_) trace_.push_back({BrokerEvent::Kind::Ack, id, consumer});
}

void BrokerQueue::requeue(ConsumerId consumer, MessageId id) {
    std::lock_guard lock(mu_);
    held(consumer, id).state = MessageState::Queued;
    queue_.push_back(id);
    if (tracing_) trace_.push_back({BrokerEvent::Kind::Requeue, id, consumer});
}

std::size_t BrokerQueue::queued() const {
    std::lock_guard lock(mu_);
    return queue_.size();
}

std::size_t BrokerQueue::in_flight() const {
    std::lock_guard lock(mu_);
    return holders_.size();
}

std::size_t BrokerQueue::acked() const {
    std::lock_guard lock(mu_);
    return acked_;
}

bool BrokerQueue::drained() const {
    std::lock_guard lock(mu_);
    return queue_.empty() && holders_.empty();
}

MinerMessage BrokerQueue::message(MessageId id) const {
    std::lock_guard lock(mu_);
    auto it = messages_.find(id);
    if (it == messages_.end()) throw Error(ErrorCode::InvalidArgument, "no message " + std::to_string(id));
    return it->second;
}

std::vector<BrokerEvent> BrokerQueue::trace() const {
    std::lock_guard lock(mu_);
    return trace_;
}

std::size_t produce(const std::vector<Coordinates>& index, BrokerQueue& broker) {
    for (const auto& c : index) broker.publish(c);
    return index.size();
}

std::vector<Coordinates> read_index(std::istream& in) {
    std::vector<Coordinates> out;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        try {
            out.push_back(Coordinates::parse(text));
        } catch (const Error& e) {
            throw RowError(n, e.what());
        }
    }
    return out;
}

// ---- sources and faults ---------------------------------------------------

std::optional<ResolvedArtifact> CorpusSource::fetch(const Coordinates& c) const {
    try {
        CorpusDocument d = read_corpus_dir(corpus_dir_of(root_, c));
        return ResolvedArtifact{std::move(d.doc), d.release_timestamp};
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<ResolvedArtifact> MemorySource::fetch(const Coordinates& c) const {
    auto it = items_.find(c);
    if (it == items_.end()) return std::nullopt;
    return it->second;
}

FaultPlan::FaultPlan(std::vector<Crash> crashes) {
    // the first entry for a (consumer, delivery) pair wins
    for (const auto& c : crashes) {
        if (c.nth == 0) throw Error(ErrorCode::InvalidArgument, "crash delivery numbers start at 1");
        if (index_.emplace(std::make_pair(c.consumer, c.nth), c.point).second) crashes_.push_back(c);
    }
    std::sort(crashes_.begin(), crashes_.end());
}

FaultPlan FaultPlan::random(std::uint64_t seed, std::size_t consumers, std::size_t crashes, std::size_t max_nth) {
    if (consumers == 0 || max_nth == 0 || crashes > consumers * max_nth) {
        throw Error(ErrorCode::InvalidArgument, "cannot place the requested crashes");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> who(0, consumers - 1);
    std::uniform_int_distribution<std::size_t> when(1, max_nth);
    std::uniform_int_distribution<int> where(0, 2);
    std::set<std::pair<ConsumerId, std::size_t>> taken;
    std::vector<Crash> out;
    while (out.size() < crashes) {
        Crash c{who(rng), when(rng), static_cast<CrashPoint>(where(rng))};
        if (taken.emplace(c.consumer, c.nth).second) out.push_back(c);
    }
    return FaultPlan(std::move(out));
}

std::optional<CrashPoint> FaultPlan::crash_at(ConsumerId consumer, std::size_t nth) const {
    auto it = index_.find({consumer, nth});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// ---- applying POMs --------------------------------------------------------

namespace {

struct Prepared {
    enum class Kind { NotFound, Corrupt, Ready } kind = Kind::NotFound;
    std::optional<ParsedPom> pom;
    EpochMillis release_timestamp = 0;
};

Prepared prepare(const Coordinates& c, const ResolveSource& source) {
    Prepared out;
    auto fetched = source.fetch(c);
    if (!fetched) return out;
    out.kind = Prepared::Kind::Corrupt;
    ParentLookup parents = [&source](const Coordinates& p) -> std::optional<PomDocument> {
        auto parent = source.fetch(p);
        if (!parent) return std::nullopt;
        return std::move(parent->doc);
    };
    try {
        ParsedPom pom = parse_pom(fetched->doc, parents);
        if (pom.coordinates != c || fetched->release_timestamp < 0) return out;
        out.pom = std::move(pom);
    } catch (const Error&) {
        return out;
    }
    out.kind = Prepared::Kind::Ready;
    out.release_timestamp = fetched->release_timestamp;
    return out;
}

struct EdgeTally {
    std::size_t versionless = 0;
    std::size_t self = 0;
};

EdgeTally apply_edges(DependencyGraph& g, const ParsedPom& pom) {
    EdgeTally t;
    for (const auto& d : pom.dependencies) {
        if (!d.version) {
            ++t.versionless;
            continue;
        }
        Coordinates target(d.group_id, d.artifact_id, *d.version);
        if (target == pom.coordinates) {
            ++t.self;
            continue;
        }
        g.insert_dependency(pom.coordinates, target, d.scope);
    }
    return t;
}

class Tally {
public:
    void success(const Coordinates& c, const EdgeTally& edges) {
        ++applied_[c];
        stats_.versionless_dependencies += edges.versionless;
        stats_.self_dependencies += edges.self;
    }
    void skipped(const Coordinates& c, Prepared::Kind kind) {
        (kind == Prepared::Kind::NotFound ? stats_.skipped_not_found : stats_.skipped_corrupt) += 1;
        skipped_.insert(c.str());
    }

    ApplyStats finish(const DependencyGraph& g) {
        ApplyStats s = stats_;
        s.inserted = applied_.size();
        for (const auto& [c, n] : applied_) s.duplicates_skipped += n - 1;
        s.replayed_inserts = g.report().duplicates_skipped - s.duplicates_skipped;
        return s;
    }
    std::vector<std::string> skipped_list() const { return {skipped_.begin(), skipped_.end()}; }

private:
    ApplyStats stats_;
    std::map<Coordinates, std::size_t> applied_;
    std::set<std::string> skipped_;
};

// Everything one pipeline run shares between its consumers.
struct Run {
    const ResolveSource& source;
    const PipelineOptions& options;
    BrokerQueue broker;
    DependencyGraph graph;
    std::mutex graph_mu;
    Tally tally;
    std::mutex tally_mu;
    std::vector<ConsumerStats> consumers;
    std::size_t crashes = 0;

    Run(const ResolveSource& s, const PipelineOptions& o)
        : source(s), options(o), broker(o.record_trace), consumers(o.consumers) {}

    void check_deliveries(const MinerMessage& m) const {
        if (m.delivery_count > options.max_deliveries) {
            throw Error(ErrorCode::Nontermination, "message " + std::to_string(m.id) + " (" + m.payload.str() +
                                                       ") exceeded " + std::to_string(options.max_deliveries) +
                                                       " deliveries");
        }
    }

    // Processes a held message; the consumer's delivery number decides
    // whether it crashes and where.
    void handle(ConsumerId c, const MinerMessage& m, std::size_t nth) {
        const auto crash = options.faults.crash_at(c, nth);
        auto fail = [&] {
            broker.requeue(c, m.id);
            std::lock_guard lock(tally_mu);
            ++consumers[c].crashed;
            ++crashes;
        };
        if (crash == CrashPoint::BeforeInsert) return fail();

        Prepared p = prepare(m.payload, source);
        EdgeTally edges;
        if (p.kind == Prepared::Kind::Ready) {
            ArtifactRecord record(p.pom->coordinates, p.pom->packaging, p.release_timestamp);
            std::lock_guard lock(graph_mu);
            graph.insert_artifact(record);
            if (crash == CrashPoint::AfterArtifact) return fail();
            edges = apply_edges(graph, *p.pom);
        }
        if (crash) return fail();

        broker.ack(c, m.id);
        std::lock_guard lock(tally_mu);
        ++consumers[c].acked;
        if (p.kind == Prepared::Kind::Ready) {
            tally.success(m.payload, edges);
        } else {
            tally.skipped(m.payload, p.kind);
        }
    }

    void run_interleaved() {
        std::vector<std::optional<MinerMessage>> held(options.consumers);
        std::vector<std::size_t> nth(options.consumers, 0);
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::size_t> pick(0, options.consumers - 1);
        for (std::size_t step = 0; !broker.drained(); ++step) {
            const ConsumerId c = options.schedule == Schedule::RoundRobin ? step % options.consumers : pick(rng);
            if (!held[c]) {
                held[c] = broker.deliver(c);
                if (held[c]) {
                    check_deliveries(*held[c]);
                    ++nth[c];
                    ++consumers[c].delivered;
                }
                continue;
            }
            handle(c, *held[c], nth[c]);
            held[c].reset();
        }
    }

    void run_threaded() {
        std::atomic<bool> abort{false};
        std::exception_ptr failure;
        std::mutex failure_mu;
        std::vector<std::thread> workers;
        for (ConsumerId c = 0; c < options.consumers; ++c) {
            workers.emplace_back([&, c] {
                try {
                    for (std::size_t nth = 0; !abort.load();) {
                        auto m = broker.deliver(c);
                        if (!m) {
                            if (broker.drained()) return;
                            std::this_thread::yield();
                            continue;
                        }
                        check_deliveries(*m);
                        ++nth;
                        {
                            std::lock_guard lock(tally_mu);
                            ++consumers[c].delivered;
                        }
                        handle(c, *m, nth);
                    }
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                    abort.store(true);
                }
            });
        }
        for (auto& w : workers) w.join();
        if (failure) std::rethrow_exception(failure);
    }
};

}  // namespace

PipelineResult run_pipeline(const std::vector<Coordinates>& index, const ResolveSource& source,
                            const PipelineOptions& options) {
    if (options.consumers == 0) throw Error(ErrorCode::InvalidArgument, "at least one consumer is required");
    Run run(source, options);
    const std::size_t produced = produce(index, run.broker);
    if (options.threaded) {
        run.run_threaded();
    } else {
        run.run_interleaved();
    }

    PipelineResult result;
    PipelineReport& r = result.report;
    r.produced = produced;
    r.acked = run.broker.acked();
    for (MessageId id = 1; id <= produced; ++id) r.redeliveries += run.broker.message(id).delivery_count - 1;
    r.injected_crashes = run.crashes;
    r.next_edges = run.graph.build_next_chains();
    r.apply = run.tally.finish(run.graph);
    r.consumers = run.consumers;
    r.skipped = run.tally.skipped_list();
    if (options.record_trace) r.trace = run.broker.trace();
    result.graph = std::move(run.graph);
    return result;
}

IngestResult ingest_corpus(const std::filesystem::path& root) {
    IngestResult out;
    CorpusListing listing = load_corpus(root);
    out.errors = std::move(listing.errors);
    const CorpusSource source(root);
    ParentLookup parents = [&source](const Coordinates& p) -> std::optional<PomDocument> {
        auto parent = source.fetch(p);
        if (!parent) return std::nullopt;
        return std::move(parent->doc);
    };
    Tally tally;
    for (const auto& d : listing.documents) {
        try {
            ParsedPom pom = parse_pom(d.doc, parents);
            out.graph.insert_artifact(ArtifactRecord(pom.coordinates, pom.packaging, d.release_timestamp));
            tally.success(pom.coordinates, apply_edges(out.graph, pom));
        } catch (const Error& e) {
            out.errors.push_back({d.doc.source, e.what()});
        }
    }
    out.graph.build_next_chains();
    out.apply = tally.finish(out.graph);
    out.apply.skipped_corrupt = out.errors.size();
    return out;
}

namespace {

void write_apply(std::ostream& out, const ApplyStats& a) {
    out << "inserted=" << a.inserted << "\n"
        << "duplicates_skipped=" << a.duplicates_skipped << "\n"
        << "replayed_inserts=" << a.replayed_inserts << "\n"
        << "skipped_not_found=" << a.skipped_not_found << "\n"
        << "skipped_corrupt=" << a.skipped_corrupt << "\n"
        << "versionless_dependencies=" << a.versionless_dependencies << "\n"
        << "self_dependencies=" << a.self_dependencies << "\n";
}

}  // namespace

void write_report(std::ostream& out, const PipelineReport& r) {
    out << "produced=" << r.produced << "\n"
        << "acked=" << r.acked << "\n"
        << "redeliveries=" << r.redeliveries << "\n"
        << "injected_crashes=" << r.injected_crashes << "\n";
    write_apply(out, r.apply);
    out << "next_edges=" << r.next_edges << "\n";
    for (std::size_t c = 0; c < r.consumers.size(); ++c) {
        const auto& s = r.consumers[c];
        out << "consumer." << c << "=delivered:" << s.delivered << ",acked:" << s.acked << ",crashed:" << s.crashed
            << "\n";
    }
}

void write_report(std::ostream& out, const IngestResult& r) {
    write_apply(out, r.apply);
    out << "next_edges=" << r.graph.next_edge_count() << "\n"
        << "file_errors=" << r.errors.size() << "\n";
    for (const auto& e : r.errors) out << "error=" << e.path << ": " << e.message << "\n";
}

}  // namespace mavengraph
