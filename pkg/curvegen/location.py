# -*- coding: utf-8 -*-
"""
Location module containing SourceLocation definition
"""


class SourceLocation(object):
    """
    Class for storing information about a position within DSL source text
    """
    def __init__(self, line, column, filename=None):
        """
        :param line: 1-based line number, non-positive when unknown (e.g. unexpected end of input)
        :param column: 1-based column number
        :param filename: name of the parsed file, if any
        """
        self.line = line
        self.column = column
        self.filename = filename

    @classmethod
    def of_token(cls, token, filename=None):
        """
        Gets location from lark token, tokens without position information give an empty location

        :param token: lark Token
        :param filename: name of the parsed file
        :return: SourceLocation object
        """
        return cls(getattr(token, 'line', None) or 0, getattr(token, 'column', None) or 0, filename)

    def __str__(self):
        """
        Joins all known fields

        :return: string in form of ``file:line:column``, with unknown parts skipped
        """
        parts = [self.filename or '<input>']
        if self:
            parts += [str(self.line), str(self.column)]
        return ':'.join(parts)

    def __bool__(self):
        """
        Tells whether location points at an actual place in source text

        :return: True if line number is known
        """
        return bool(self.line and self.line > 0)

    def __eq__(self, other):
        return isinstance(other, SourceLocation) and \
            (self.line, self.column, self.filename) == (other.line, other.column, other.filename)

    def __hash__(self):
        return hash((self.line, self.column, self.filename))

    def __repr__(self):
        return 'SourceLocation({!r}, {!r}, {!r})'.format(self.line, self.column, self.filename)
