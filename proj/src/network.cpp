#include "tsnsim/network.hpp"

#include <stdexcept>
#include <string>

#include "tsnsim/cqf3q_port.hpp"
#include "tsnsim/cqf_port.hpp"
#include "tsnsim/paternoster_port.hpp"

namespace tsnsim {

void Switch::ingest(Frame f, SimTime now) {
    if (f.remaining_hops == 0) {
        const SimTime delay = now - f.created_at;
        if (delay < 0) {
            throw std::logic_error("negative end-to-end delay at switch " +
                                   std::to_string(index_));
        }
        ++delivered_;
        stats_.record_delivery(f.klass, now, delay, f.bits());
        if (delivery_observer_) delivery_observer_(f, now, delay);
        return;
    }
    f.remaining_hops -= 1;
    if (egress_ == nullptr) {
        throw std::logic_error("switch has no egress port attached");
    }
    egress_->accept(std::move(f), now);
}

void Switch::on_event(const Event& ev) {
    if (ev.kind != EventKind::FrameArrival || !ev.frame) {
        throw std::logic_error("switch received unexpected event kind");
    }
    ingest(*ev.frame, ev.time);
}

Simulation::Simulation(const RunConfig& cfg, SimOptions opts)
    : cfg_(cfg), stats_(cfg.warmup_ns) {
    if (cfg.switches < 2) {
        throw std::invalid_argument("ring needs at least 2 switches");
    }
    const int n = cfg.switches;
    switches_.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        switches_.push_back(std::make_unique<Switch>(engine_, stats_, i));
        if (opts.delivery_observer) {
            switches_.back()->set_delivery_observer(opts.delivery_observer);
        }
    }

    ports_.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const LinkTarget link{switches_[static_cast<size_t>((i + 1) % n)]->id(),
                              cfg.prop_delay_ns, kLinkRateBps};
        std::unique_ptr<EgressPort> port;
        switch (cfg.scheduler) {
            case Scheduler::Cqf:
                port = std::make_unique<CqfPort>(
                    engine_, stats_, link,
                    CqfPort::Params{cfg.cycle_time_ns, cfg.st_window_ns,
                                    cfg.queue_bits});
                break;
            case Scheduler::Paternoster: {
                // Epochs are frequency-locked to the cycle time but phase
                // shifted per switch, i.i.d. uniform over one epoch.
                Rng phase_rng(
                    derive_seed(cfg.run_seed, kSeedDomainPhase,
                                static_cast<std::uint64_t>(i)));
                const SimTime phase = phase_rng.next_below(cfg.cycle_time_ns);
                port = std::make_unique<PaternosterPort>(
                    engine_, stats_, link,
                    PaternosterPort::Params{cfg.cycle_time_ns, phase,
                                            cfg.queue_bits,
                                            cfg.reservation_bits()});
                break;
            }
            case Scheduler::Cqf3q:
                port = std::make_unique<Cqf3qPort>(
                    engine_, stats_, link,
                    Cqf3qPort::Params{cfg.cycle_time_ns, cfg.st_window_ns,
                                      cfg.queue_bits});
                break;
        }
        if (opts.tx_observer) port->set_tx_observer(opts.tx_observer);
        ports_.push_back(std::move(port));
        switches_[static_cast<size_t>(i)]->attach_egress(ports_.back().get());
    }

    const SimTime duration =
        opts.source_duration_ns.value_or(cfg.sim_limit_ns);
    sources_.reserve(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        SourceSpec st;
        st.stream_id = i;
        st.klass = TrafficClass::ST;
        st.periodic = cfg.st_kind == StKind::Periodic;
        st.pi = cfg.pi;
        st.intensity_bps = cfg.st_intensity_bps;
        st.frame_bytes = cfg.st_frame_bytes;
        st.ttl = cfg.ttl;
        st.phase_ns = cfg.st_phase_offset_ns;
        st.duration_ns = duration;
        st.cycle_time_ns = cfg.cycle_time_ns;
        st.seed = derive_seed(cfg.run_seed, kSeedDomainSource,
                              static_cast<std::uint64_t>(i));
        sources_.push_back(std::make_unique<TrafficSource>(
            engine_, stats_, *switches_[static_cast<size_t>(i)], st));
    }
    for (int i = 0; i < n; ++i) {
        SourceSpec be;
        be.stream_id = n + i;
        be.klass = TrafficClass::BE;
        be.periodic = false;
        be.intensity_bps = cfg.be_intensity_bps;
        be.frame_bytes = cfg.be_frame_bytes;
        be.ttl = cfg.ttl;
        be.phase_ns = 0;
        be.duration_ns = duration;
        be.cycle_time_ns = cfg.cycle_time_ns;
        be.seed = derive_seed(cfg.run_seed, kSeedDomainSource,
                              static_cast<std::uint64_t>(n + i));
        sources_.push_back(std::make_unique<TrafficSource>(
            engine_, stats_, *switches_[static_cast<size_t>(i)], be));
    }
}

Simulation::~Simulation() = default;

RunReport Simulation::run() {
    if (ran_) throw std::logic_error("simulation already ran");
    ran_ = true;
    for (auto& p : ports_) p->start();
    for (auto& s : sources_) s->start();
    engine_.run(cfg_.sim_limit_ns);

    RunReport report;
    report.st_raw = stats_.stats(TrafficClass::ST);
    report.be_raw = stats_.stats(TrafficClass::BE);
    const SimTime interval = cfg_.sim_limit_ns - cfg_.warmup_ns;
    report.st = finalize(report.st_raw, interval);
    report.be = finalize(report.be_raw, interval);
    return report;
}

}  // namespace tsnsim
