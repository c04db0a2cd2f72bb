"""Multi-round game scoring with streak bonuses."""

STREAK_BONUS = 5
WIN_POINTS = 10
DRAW_POINTS = 4


class ScoreKeeper:
    def __init__(self, players):
        self.totals = {p: 0 for p in players}
        self.streaks = {p: 0 for p in players}
        self.rounds = 0

    def record_round(self, winner=None, draws=None):
        self.rounds += 1
        draws = draws or []
        for player in self.totals:
            if player == winner:
                self.streaks[player] += 1
                bonus = STREAK_BONUS * max(0, self.streaks[player] - 1)
                self.totals[player] += WIN_POINTS + bonus
            elif player in draws:
                self.totals[player] += DRAW_POINTS
                self.streaks[player] = 0
            else:
                self.streaks[player] = 0

    def leaderboard(self):
        return sorted(self.totals.items(), key=lambda kv: (-kv[1], kv[0]))

    def leader(self):
        board = self.leaderboard()
        if not board:
            return None
        if len(board) > 1 and board[0][1] == board[1][1]:
            return None
        return board[0][0]

    def hot_streak(self):
        best = None
        for player, streak in sorted(self.streaks.items()):
            if streak >= 2 and (best is None or streak > self.streaks[best]):
                best = player
        return best


def play_season(players, results):
    keeper = ScoreKeeper(players)
    for result in results:
        if isinstance(result, str):
            keeper.record_round(winner=result)
        else:
            keeper.record_round(draws=list(result))
    return keeper.leaderboard()
