"""A corpus of realistic Python one-liners in the style of CoNaLa targets.

Used to generate tokenizer and metric fixtures. The first few entries are
snippets that any StackOverflow-derived corpus is expected to handle
(numpy slicing, join idioms, deprecated print statements wrapped by
callers, etc.).
"""

SNIPPETS = [
    "x = 1",
    "a[:, (np.newaxis)]",
    "scipy.tensordot(P, T, axes=[1, 1]).swapaxes(0, 1)",
    "print(' '.join(map(str, l)))",
    '""":""".join(str(x) for x in b)',
    "sorted(l, key=lambda x: (-int(x[1]), x[0]))",
    "len(set(mylist)) == 1",
    "df.groupby('id').size()",
    "re.sub(r'[^a-zA-Z0-9]', '', s)",
    "open('path/to/file.txt', 'r').read()",
    "dict((k, v) for k, v in mydict.items() if v is not None)",
    "[int(x) for x in '3 , 14'.split(',')]",
    "zip(*[(1, 4), (2, 5), (3, 6)])",
    "datetime.datetime.strptime('2011221', '%Y%W%w')",
    "np.array(a, dtype=np.float64)",
    "os.path.splitext(os.path.basename('hemanth.txt'))[0]",
    "subprocess.call(['ls', '-l'])",
    "max(enumerate(a), key=lambda x: x[1])[0]",
    "min(my_list, key=lambda x: abs(x - my_value))",
    "requests.get(url, headers={'User-Agent': 'Mozilla/5.0'})",
    "random.randint(0, 10)",
    "collections.Counter(mylist).most_common(2)",
    "itertools.chain.from_iterable(list_of_lists)",
    "pd.concat([df1, df2], ignore_index=True)",
    "json.dumps({'apple': 'cat'}, sort_keys=True)",
    "''.join(chr(i) for i in mylist)",
    "s.encode('utf-8').decode('ascii', 'ignore')",
    "plt.plot(x, y, 'ro')",
    "sum(d * 10 ** i for i, d in enumerate(x[::-1]))",
    "list(filter(lambda x: x % 2 == 0, range(20)))",
    "df['col'].apply(lambda x: x ** 2)",
    "np.where(arr > 0, arr, 0)",
    "time.sleep(0.1)",
    "struct.unpack('>I', s)[0]",
    "getattr(obj, 'attr_name', None)",
    "isinstance(value, (int, float))",
    "shutil.copyfile('a.txt', 'b.txt')",
    "glob.glob('*.txt')",
    "next(iter(my_dict.values()))",
    "sorted(d.items(), key=operator.itemgetter(1), reverse=True)",
    "b = a[:]",
    "for i, item in enumerate(mylist): print(i, item)",
    "urllib.parse.urlencode({'q': 'python'})",
    "s.translate(str.maketrans('', '', string.punctuation))",
    "np.linalg.norm(vec1 - vec2)",
    "set(list1) & set(list2)",
    "tuple(reversed(range(10)))",
    "int('0b100', 0)",
    "binascii.hexlify(os.urandom(16))",
    "df.drop(df.columns[[1, 2]], axis=1, inplace=True)",
    "matrix.transpose().tolist()",
    "threading.Thread(target=worker, args=(q,)).start()",
    "base64.b64encode(bytes('your string', 'utf-8'))",
    "round(1.923328437452, 3)",
    "myList = ','.join(map(str, myList))",
    "if not os.path.exists(directory): os.makedirs(directory)",
    "del my_dict['key']",
    "x = np.asarray(x).reshape(1, -1)[0, :]",
    "cursor.execute('SELECT * FROM table WHERE id = ?', (row_id,))",
    "print('%.3f' % 3.1415926)",
    "app.run(debug=True)",
    "soup.find_all('a', href=True)",
    "ast.literal_eval(\"{'x': 1}\")",
    "functools.reduce(operator.mul, data, 1)",
    "line.strip().split('\\t')",
    "print(open('input.txt').read().rstrip())",
    "logging.basicConfig(level=logging.DEBUG)",
    "numpy.zeros((3, 4), dtype=float)",
    "socket.gethostbyname(socket.gethostname())",
    "'{0:.2f}'.format(math.pi)",
    "all(x == myList[0] for x in myList)",
    "heapq.nlargest(2, data, key=lambda x: x['price'])",
    "os.environ.get('HOME', '/tmp')",
    "bytes.fromhex('4a4b4c').decode('utf-8')",
    "pickle.dump(mylist, open('save.txt', 'wb'))",
    "df.to_csv('out.csv', index=False, encoding='utf-8')",
    "[x for sublist in lst for x in sublist]",
    "map(int, input().split())",
    "a.setdefault(key, []).append(value)",
    "while True: pass",
    "with open('data.json') as f: data = json.load(f)",
    "lst.insert(0, 'foo')",
    "str(uuid.uuid4())",
    "(lambda x, y: x + y)(1, 2)",
    "range(0, len(mylist), 3)",
    "signal.signal(signal.SIGINT, handler)",
    "self.assertEqual(response.status_code, 200)",
    "camelCaseName = someOtherValue",
    "getElementById('myId').innerHTML",
    "parseString(xmlData).getElementsByTagName('item')",
    "myDataFrame.sortValues(by='columnName')",
    "someVeryLongVariableName += anotherCamelCaseThing",
    "obj.toJSON().parseFloat()",
    "print 'hello world'",
    "print('caf\u00e9 \u2014 r\u00e9sum\u00e9')",
    "s = 'unicode: \u03b1\u03b2\u03b3'",
    "f'{value:.2f} and {other!r}'",
    "x ** 2 + y ** 2 <= r ** 2",
    "a if condition else b",
    "not any(c.isdigit() for c in s)",
    "result = {**dict1, **dict2}",
    "arr[arr[:, 0] == 1]",
    "np.einsum('ij,jk->ik', A, B)",
    "yield from gen()",
    "assert len(x) > 0, 'empty input'",
    "global counter; counter += 1",
    "try:\n    risky()\nexcept ValueError as e:\n    print(e)",
    "def f(*args, **kwargs):\n    return args, kwargs",
    "class Point:\n    def __init__(self, x, y):\n        self.x = x\n        self.y = y",
    "import numpy as np",
    "from collections import defaultdict",
    "@decorator\ndef wrapped():\n    pass",
    "lst += [1]",
    "x, y = y, x",
    "q = deque(maxlen=5)",
]
