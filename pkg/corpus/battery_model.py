"""Charge/discharge bookkeeping for a battery bank."""


class Battery:
    def __init__(self, capacity_wh, charge_wh=None, efficiency=0.92):
        self.capacity = capacity_wh
        self.charge = capacity_wh if charge_wh is None else charge_wh
        self.efficiency = efficiency
        self.cycles = 0.0

    def store(self, energy_wh):
        """Returns the energy actually absorbed."""
        usable = energy_wh * self.efficiency
        space = self.capacity - self.charge
        absorbed = min(usable, space)
        self.charge += absorbed
        self.cycles += absorbed / self.capacity / 2
        return absorbed


    def draw(self, energy_wh):
        """Returns the energy actually delivered."""
        available = self.charge
        delivered = min(energy_wh, available)
        self.charge -= delivered
        self.cycles += delivered / self.capacity / 2
        return delivered

    def level(self):
        return self.charge / self.capacity


def run_day(battery, generation, demand):
    """Hourly generation vs demand; grid covers the gap."""
    imported = 0.0
    exported = 0.0
    for produced, needed in zip(generation, demand):
        surplus = produced - needed
        if surplus >= 0:
            stored = battery.store(surplus)
            exported += surplus - stored
        else:
            supplied = battery.draw(-surplus)
            imported += -surplus - supplied
    return {"imported": round(imported, 2), "exported": round(exported, 2), "level": round(battery.level(), 3)}


def days_until_empty(battery, daily_deficit_wh):
    if daily_deficit_wh <= 0:
        return None
    days = 0
    while battery.charge > 0:
        battery.draw(daily_deficit_wh)
        days += 1
        if days > 10000:
            break
    return days
