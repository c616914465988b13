#ifndef OESIM_PACKET_HPP
#define OESIM_PACKET_HPP

#include "oesim/time.hpp"

#include <cstdint>

namespace oesim {

enum class PacketClass : std::uint8_t { HP = 0, LP = 1 };

inline constexpr const char* to_string(PacketClass c) {
    return c == PacketClass::HP ? "HP" : "LP";
}

// One frame. Timestamps are filled in as the packet moves through the
// switch; kUnset marks fields not reached yet.
struct Packet {
    static constexpr SimTime kUnset = -1;

    std::uint64_t id = 0; // per-class sequence number, increasing in arrival order
    PacketClass cls = PacketClass::HP;
    std::int32_t size_bytes = 0;
    SimTime arrival = kUnset;
    SimTime service_start = kUnset;
    SimTime departure = kUnset;

    // Cut-through latency: time until the first bit leaves the switch.
    SimTime wait() const { return service_start - arrival; }
};

} // namespace oesim

#endif
