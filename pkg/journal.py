#!/usr/bin/env python3

"""Journal Classes

This module contains the activity journal. Every checker logs what it is doing (samples drawn,
refinements done, shards scanned) to a journal under a topic, so that a long run can be followed
and audited afterwards.

Journal entries never end up in a report, since reports must be byte-identical across runs and
journal entries carry timestamps.

Users of this module should make a sink (MemoryJournal, or JournalDatabase if the journal should
be kept in a SQLite file), and hand out Journal instances, one per topic.
"""

import sys
import threading
from PyQt5.QtCore import QCoreApplication, QDateTime
from PyQt5.QtSql import QSqlDatabase, QSqlQuery
import common

__copyright__ = '''
    Copyright (C) 2019 AccRel developers

    This program is free software: you can redistribute it and/or modify
    it under the terms of the GNU General Public License as published by
    the Free Software Foundation, either version 3 of the License, or
    (at your option) any later version.

    This program is distributed in the hope that it will be useful,
    but WITHOUT ANY WARRANTY; without even the implied warranty of
    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
    GNU General Public License for more details.

    You should have received a copy of the GNU General Public License
    along with this program.  If not, see <https://www.gnu.org/licenses/>.
'''
__author__ = common.AUTHOR
__credits__ = common.CREDITS
__license__ = common.LICENSE
__version__ = common.VERSION
__maintainer__ = common.MAINTAINER
__email__ = common.EMAIL
__status__ = common.STATUS

TIMESTAMP_FORMAT = 'yyyy-MM-dd @ h:mm:ss.zzz'

class DatabaseError(Exception):
    """Raised when QtSql reports a failure on the journal database.

    QtSql calls return False on failure; the error text comes from lastError().
    """

class MemoryJournal():
    """Journal sink that keeps entries in memory.

    Optionally echoes every entry to a stream (stderr by default), which is what --verbose does.
    """
    def __init__(self, echo=False, stream=None):
        """Initialize the MemoryJournal instance."""
        self.entries = []
        self.echo = echo
        self.stream = stream or sys.stderr
        self.lock = threading.Lock()

    def add_entry(self, topic, message):
        """Add an entry."""
        timestamp = QDateTime.currentDateTime()

        with self.lock:
            self.entries.append((timestamp, topic, message))

        if self.echo:
            self.stream.write('%s [%s] %s\n' % (timestamp.toString(TIMESTAMP_FORMAT), topic,
                                                message))

    def messages(self, topic=None):
        """Returns the logged messages, optionally only those of one topic."""
        with self.lock:
            return [message for _, entry_topic, message in self.entries
                    if topic is None or entry_topic == topic]

    def close(self):
        """Nothing to release for an in-memory journal."""

class JournalDatabase(MemoryJournal):
    """Journal sink that also persists entries in a SQLite database table.

    TOPIC is meant to be a general facility code, for coarse filtering. For example, "witness".
    MESSAGE is the long, detailed message.
    """

    TABLE = 'journal'
    ID = 'id'
    TIMESTAMP = 'timestamp'
    TOPIC = 'topic'
    MESSAGE = 'message'

    def __init__(self, filename, echo=False, stream=None):
        """Initialize the JournalDatabase instance."""
        super().__init__(echo=echo, stream=stream)

        self.filename = filename

        # The SQLite driver is a plugin, and plugins are only found once an application exists.
        self.app = QCoreApplication.instance() or QCoreApplication([common.APPLICATION_NAME])

        self.db = QSqlDatabase.addDatabase('QSQLITE', self.filename)

        if not self.db.isValid():
            raise DatabaseError('Invalid database')

        self.db.setDatabaseName(filename)

        if not self.db.open():
            raise DatabaseError(self.db.lastError().text())

        self.create_table()

    def create_table(self):
        """Create the database table."""
        query = QSqlQuery(self.db)

        if not query.exec(
            'CREATE TABLE IF NOT EXISTS "%s" ' % self.TABLE +
            '("%s" INTEGER NOT NULL PRIMARY KEY, ' % self.ID +
             '"%s" DATETIME NOT NULL, ' % self.TIMESTAMP +
             '"%s" TEXT NOT NULL, ' % self.TOPIC +
             '"%s" TEXT NOT NULL);' % self.MESSAGE):
            raise DatabaseError(query.lastError().text())

        query.finish()

    def add_entry(self, topic, message):
        """Add a row to the database table, as well as to the in-memory list."""
        super().add_entry(topic, message)

        timestamp = self.entries[-1][0]

        with self.lock:
            query = QSqlQuery(self.db)
            query.prepare('INSERT INTO "%s" ("%s", "%s", "%s") VALUES (?, ?, ?);' %
                          (self.TABLE, self.TIMESTAMP, self.TOPIC, self.MESSAGE))
            query.addBindValue(timestamp.toString(TIMESTAMP_FORMAT))
            query.addBindValue(topic)
            query.addBindValue(message)

            if not query.exec():
                raise DatabaseError(query.lastError().text())

            query.finish()

    def close(self):
        """Close the database."""
        self.db.close()
        self.db = None
        QSqlDatabase.removeDatabase(self.filename)

class Journal():
    """Journal helper class.

    This class is meant to simplify the use of the journal sink. With this class, you don't have
    to keep referring to the sink...just pass it in once when we make an instance of this class.
    We can also give it a topic (or not).

    After making one of these, simply do:
    journal.log(message)

    """
    def __init__(self, topic, sink=None):
        """Initialize the Journal instance."""
        self.sink = sink if sink is not None else MemoryJournal()
        self.topic = topic

    def log(self, message):
        """Log a journal entry."""
        self.sink.add_entry(self.topic, message)

    def child(self, topic):
        """Returns a journal with another topic, writing to the same sink."""
        return Journal(topic, self.sink)

def null_journal(topic):
    """Returns a journal that nobody is going to read."""
    return Journal(topic, MemoryJournal())
