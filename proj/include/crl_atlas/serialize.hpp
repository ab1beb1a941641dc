#pragma once

// JSON encoding of every result type. Keys keep a fixed order; rationals are
// strings "p/q"; infinite doubles are encoded as null. Each encoder has a
// decoder with decode(encode(x)) == x.

#include <json.hpp>

#include <cstdint>
#include <string>

#include "crl_atlas/apolarity.hpp"
#include "crl_atlas/boundary.hpp"
#include "crl_atlas/loci.hpp"
#include "crl_atlas/partition.hpp"
#include "crl_atlas/rank.hpp"

namespace crl_atlas {

using Json = nlohmann::ordered_json;

/// Settings shared by every command; echoed into each output.
struct RunConfig {
    std::uint64_t seed = 0;
    double tol_on = 1e-8;
    double tol_off = 1e-3;
    int rank_samples = 2000;
    int rank_restarts = 50;
    int climb_steps = 200;
    int multistarts = 2000;
    int threads = 1;
    std::string format = "json";

    RankBudget budget() const { return {rank_samples, rank_restarts, climb_steps, seed}; }
    MembershipConfig membership() const { return {tol_on, tol_off, multistarts, 200, seed}; }
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

Json to_json(const Rational& q);
Json to_json(const BinaryForm& f);
Json to_json(const DualForm& q);
Json to_json(const Partition& p);
Json to_json(const DualComponentSum& s);
Json to_json(const Table1Entry& e);
Json to_json(const RankBudget& b);
Json to_json(const ScanStep& s);
Json to_json(const RankCertificate& c);
Json to_json(const HistogramResult& h);
Json to_json(const BoundaryCandidateSet& s);
Json to_json(const MembershipConfig& c);
Json to_json(const MembershipReport& r);
Json to_json(const CrossingConfig& c);
Json to_json(const CrossingEvent& e);
Json to_json(const CrossingScan& s);
Json to_json(const RunConfig& c);

template <class T>
T from_json(const Json& j);

template <> Rational from_json<Rational>(const Json& j);
template <> BinaryForm from_json<BinaryForm>(const Json& j);
template <> DualForm from_json<DualForm>(const Json& j);
template <> Partition from_json<Partition>(const Json& j);
template <> DualComponentSum from_json<DualComponentSum>(const Json& j);
template <> Table1Entry from_json<Table1Entry>(const Json& j);
template <> RankBudget from_json<RankBudget>(const Json& j);
template <> ScanStep from_json<ScanStep>(const Json& j);
template <> RankCertificate from_json<RankCertificate>(const Json& j);
template <> HistogramResult from_json<HistogramResult>(const Json& j);
template <> BoundaryCandidateSet from_json<BoundaryCandidateSet>(const Json& j);
template <> MembershipConfig from_json<MembershipConfig>(const Json& j);
template <> MembershipReport from_json<MembershipReport>(const Json& j);
template <> CrossingConfig from_json<CrossingConfig>(const Json& j);
template <> CrossingEvent from_json<CrossingEvent>(const Json& j);
template <> CrossingScan from_json<CrossingScan>(const Json& j);
template <> RunConfig from_json<RunConfig>(const Json& j);

}  // namespace crl_atlas
