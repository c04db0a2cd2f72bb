"""Even/odd partitioning."""


def split_parity(nums):
    evens = [n for n in nums if n % 2 == 0]
    odds = [n for n in nums if n % 2 != 0]
    return evens, odds


def alternates(nums):
    return all((a + b) % 2 == 1 for a, b in zip(nums, nums[1:]))
