"""Tracking which member borrowed which book."""


class Book:
    def __init__(self, isbn, title):
        self.isbn = isbn
        self.title = title


class Library:
    def __init__(self):
        self.catalog = {}
        self.loans = {}
        self.waitlist = {}

    def register(self, book, copies=1):
        entry = self.catalog.setdefault(book.isbn, [book, 0])
        entry[1] += copies

    def copies_available(self, isbn):
        entry = self.catalog.get(isbn)
        if entry is None:
            return 0
        on_loan = sum(1 for loan_isbn in self.loans.values() if loan_isbn == isbn)
        return entry[1] - on_loan

    def borrow(self, member, isbn):
        if member in self.loans:
            return False
        if self.copies_available(isbn) <= 0:
            self.waitlist.setdefault(isbn, []).append(member)
            return False
        self.loans[member] = isbn
        return True

    def give_back(self, member):
        isbn = self.loans.pop(member, None)
        if isbn is None:
            return None
        waiting = self.waitlist.get(isbn, [])
        if waiting:
            next_member = waiting.pop(0)
            self.loans[next_member] = isbn
        return isbn

    def overdue_notices(self, members):
        notices = []
        for member in members:
            isbn = self.loans.get(member)
            if isbn is not None:
                title = self.catalog[isbn][0].title
                notices.append(f"{member}: please return {title}")
        return notices
