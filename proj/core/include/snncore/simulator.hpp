#pragma once

#include <snncore/network.hpp>
#include <snncore/spike_train.hpp>

#include <functional>
#include <iosfwd>
#include <optional>

namespace snn {

/*
 * Decay factors between consecutive events. Exact models produce rational
 * factors (always possible for Zero/Infinite memory, and for finite memory
 * when the caller supplies a rational decay profile); the float model
 * evaluates e^{-gap/h} in double precision with strict comparisons.
 */
struct DecayModel {
	bool exact = true;
	// True when the factor is constantly 1 (no decay); lets simulators skip
	// the per-gap multiplication.
	bool unit = false;
	// exact path: multiplicative factor for the gap (a, b], a < b
	std::function<Rat(const Time&, const Time&)> factor;
	// float path
	std::function<double(const Time&, const Time&)> ffactor;
};

DecayModel decay_model(const MemoryMode& memory);
// Exact finite-memory surrogate: factor(a,b) = phi(b)/phi(a) for a strictly
// decreasing positive rational profile phi. Multiplicative by construction.
DecayModel profile_decay_model(std::function<Rat(const Time&)> phi);
// phi(t) = (1+t)^{-k}; k tunes the decay speed.
DecayModel power_decay_model(unsigned k);

struct StreamEvent {
	Time label;
	Rat factor = 1;       // exact decay from previous event
	double ffactor = 1;   // float decay from previous event
	std::vector<std::size_t> active;  // input indices spiking at label
};

struct DecayStream {
	std::vector<StreamEvent> events;
	std::size_t input_count = 0;
	bool exact = true;
};

DecayStream decay_stream(const std::vector<SpikeTrain>& inputs,
                         const MemoryMode& memory);
DecayStream decay_stream(const std::vector<SpikeTrain>& inputs,
                         const DecayModel& model);
// Caller-supplied rational factors, one per union event (first is ignored).
DecayStream decay_stream_with_factors(const std::vector<SpikeTrain>& inputs,
                                      const std::vector<Rat>& factors);

struct TracePoint {
	Time label;
	Rat potential = 0;
	double fpotential = 0;
	bool spiked = false;
};

struct PotentialTrace {
	std::vector<TracePoint> points;
	bool exact = true;
};

std::pair<SpikeTrain, PotentialTrace> simulate_unit(
    const std::vector<Rat>& weights, const DecayStream& stream);

std::vector<SpikeTrain> simulate_network(
    const Network& net, const std::vector<SpikeTrain>& inputs,
    std::optional<MemoryMode> override_memory = {});

// Same, but with an explicit decay model (exact finite-memory surrogates).
std::vector<SpikeTrain> simulate_network(const Network& net,
                                         const std::vector<SpikeTrain>& inputs,
                                         const DecayModel& model);

/*
 * Float-mode simulation on a regular grid: every unit sees a virtual event at
 * each grid time and multiplies by the per-step factor once per step. This
 * matches a discrete-time recurrent evaluation bit for bit.
 */
std::vector<SpikeTrain> simulate_network_grid(const Network& net,
                                              const std::vector<SpikeTrain>& inputs,
                                              const Rat& delta,
                                              std::size_t steps,
                                              double step_factor);

struct TraceRow {
	std::size_t layer = 0;   // 1-based
	std::size_t neuron = 0;  // 1-based within layer
	Time event_time;
	std::string potential;
	bool spiked = false;
};

std::vector<TraceRow> simulate_network_trace(
    const Network& net, const std::vector<SpikeTrain>& inputs,
    std::optional<MemoryMode> override_memory = {});

// CSV: layer,neuron,event_time,potential,spiked
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows);

// Unfolded form of the recursion: the potential at event r as a clamped
// double sum over events after the last reset/clamp index j.
Rat unfolded_potential(const std::vector<Rat>& weights,
                       const DecayStream& stream, std::size_t r,
                       std::size_t j);

}  // namespace snn
