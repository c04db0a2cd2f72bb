"""Greedy and exact change making with limited coin stocks."""

US_COINS = 25, 10, 5, 1


def greedy_change(amount, coins=US_COINS):
    out = {}
    remaining = amount
    for coin in sorted(coins, reverse=True):
        count, remaining = divmod(remaining, coin)
        if count:
            out[coin] = count
    if remaining:
        raise ValueError(f"cannot make {amount} from {coins}")
    return out


def change_with_stock(amount, stock):
    """Depth-first search honoring limited quantities per coin."""
    coins = sorted(stock, reverse=True)

    def search(remaining, index, used):
        if remaining == 0:
            return dict(used)
        if index >= len(coins):
            return None
        coin = coins[index]
        most = min(stock[coin], remaining // coin)
        for count in range(most, -1, -1):
            if count:
                used[coin] = count
            result = search(remaining - coin * count, index + 1, used)
            if result is not None:
                return result
            used.pop(coin, None)
        return None

    return search(amount, 0, {})


def count_ways(amount, coins=US_COINS):
    table = [1] + [0] * amount
    for coin in coins:
        for target in range(coin, amount + 1):
            table[target] += table[target - coin]
    return table[amount]


def fewest_coins(amount, coins=US_COINS):
    INF = amount + 1
    table = [0] + [INF] * amount
    picks = [0] * (amount + 1)
    for target in range(1, amount + 1):
        for coin in coins:
            if coin <= target and table[target - coin] + 1 < table[target]:
                table[target] = table[target - coin] + 1
                picks[target] = coin
    if table[amount] >= INF:
        return None
    out = {}
    cursor = amount
    while cursor:
        coin = picks[cursor]
        out[coin] = out.get(coin, 0) + 1
        cursor -= coin
    return out
