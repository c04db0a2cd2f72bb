"""Dynamic programming solutions to the 0/1 knapsack problem."""


def best_value(weights, values, capacity):
    if len(weights) != len(values):
        raise ValueError("weights and values must align")
    table = [0] * (capacity + 1)
    for w, v in zip(weights, values):
        for cap in range(capacity, w - 1, -1):
            candidate = table[cap - w] + v
            if candidate > table[cap]:
                table[cap] = candidate
    return table[capacity]


def chosen_items(weights, values, capacity):
    n = len(weights)
    table = [[0] * (capacity + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        w = weights[i - 1]
        v = values[i - 1]
        for cap in range(capacity + 1):
            table[i][cap] = table[i - 1][cap]
            if w <= cap:
                candidate = table[i - 1][cap - w] + v
                if candidate > table[i][cap]:
                    table[i][cap] = candidate
    chosen = []
    cap = capacity
    for i in range(n, 0, -1):
        if table[i][cap] != table[i - 1][cap]:
            chosen.append(i - 1)
            cap -= weights[i - 1]
    chosen.reverse()
    return chosen


def coin_change(coins, amount):
    """Fewest coins summing to amount, or -1."""
    INF = amount + 1
    table = [0] + [INF] * amount
    for target in range(1, amount + 1):
        for coin in coins:
            if coin <= target and table[target - coin] + 1 < table[target]:
                table[target] = table[target - coin] + 1
    if table[amount] >= INF:
        return -1
    return table[amount]
