"""State for a small turn-based duel."""

MAX_HEALTH = 100


class Fighter:
    def __init__(self, name, attack=12, defense=4):
        self.name = name
        self.attack = attack
        self.defense = defense
        self.health = MAX_HEALTH
        self.potions = 2

    def is_alive(self):
        return self.health > 0

    def take_damage(self, amount):
        absorbed = min(self.defense, amount - 1)
        dealt = max(1, amount - absorbed)
        self.health = max(0, self.health - dealt)
        return dealt

    def drink_potion(self):
        if self.potions <= 0:
            return 0
        self.potions -= 1
        healed = min(30, MAX_HEALTH - self.health)
        self.health += healed
        return healed


def choose_action(fighter, opponent):
    if fighter.health < 25 and fighter.potions > 0:
        return "potion"
    if opponent.health <= fighter.attack:
        return "attack"
    return "attack"


def run_duel(left, right, max_turns=50):
    log = []
    attacker, defender = left, right
    for turn in range(1, max_turns + 1):
        action = choose_action(attacker, defender)
        if action == "potion":
            healed = attacker.drink_potion()
            log.append(f"turn {turn}: {attacker.name} heals {healed}")
        else:
            dealt = defender.take_damage(attacker.attack)
            log.append(f"turn {turn}: {attacker.name} hits for {dealt}")
        if not defender.is_alive():
            log.append(f"{defender.name} is defeated")
            return attacker.name, log
        attacker, defender = defender, attacker
    return "", log
