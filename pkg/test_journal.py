"""Tests for the journal sinks."""

import io
from PyQt5.QtSql import QSqlQuery
from journal import Journal, JournalDatabase, MemoryJournal, null_journal

def test_memory_journal_topics():
    sink = MemoryJournal()
    journal = Journal('field', sink)
    journal.log('first')
    journal.child('witness').log('second')

    assert sink.messages() == ['first', 'second']
    assert sink.messages('witness') == ['second']

def test_echo():
    stream = io.StringIO()
    Journal('rcf', MemoryJournal(echo=True, stream=stream)).log('hello')
    assert stream.getvalue().rstrip().endswith('[rcf] hello')

def test_null_journal():
    journal = null_journal('specrel')
    journal.log('ignored')
    assert journal.sink.messages() == ['ignored']

def test_journal_database(tmp_path):
    filename = str(tmp_path / 'journal.db')
    sink = JournalDatabase(filename)
    journal = Journal('witness', sink)
    journal.log('degree 1 done')
    journal.log('degree 2 done')

    query = QSqlQuery(sink.db)
    assert query.exec('SELECT "topic", "message" FROM "journal" ORDER BY "id";')
    rows = []
    while query.next():
        rows.append((query.value(0), query.value(1)))
    query.finish()
    del query

    assert rows == [('witness', 'degree 1 done'), ('witness', 'degree 2 done')]
    sink.close()
