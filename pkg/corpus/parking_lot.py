"""Allocating parking spots by vehicle size."""

SPOT_SIZES = {"small": 1, "medium": 2, "large": 3}


class ParkingLot:
    def __init__(self, small=10, medium=6, large=2):
        self.capacity = {"small": small, "medium": medium, "large": large}
        self.occupied = {"small": 0, "medium": 0, "large": 0}
        self.tickets = {}
        self.next_ticket = 1

    def free_spots(self, size):
        return self.capacity[size] - self.occupied[size]

    def spot_for(self, vehicle_size):
        order = ["small", "medium", "large"]
        need = SPOT_SIZES[vehicle_size]
        for size in order:
            if SPOT_SIZES[size] >= need and self.free_spots(size) > 0:
                return size
        return None

    def enter(self, vehicle_size):
        size = self.spot_for(vehicle_size)
        if size is None:
            return None
        self.occupied[size] += 1
        ticket = self.next_ticket
        self.next_ticket += 1
        self.tickets[ticket] = size
        return ticket

    def leave(self, ticket):
        size = self.tickets.pop(ticket, None)
        if size is None:
            raise KeyError(f"unknown ticket {ticket}")
        self.occupied[size] -= 1
        return size

    def utilization(self):
        used = sum(self.occupied.values())
        total = sum(self.capacity.values())
        if total == 0:
            return 0.0
        return used / total
