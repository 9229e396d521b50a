"""Frozen expected catalog rows used as oracles by the test-suite.

TABLE1: binary lengths 4..71, TABLE2: ternary lengths 3..39 (rows are
(n, k, weights, frequencies, status)); TABLE3: binary midpoint-conjecture
counterexample scan to length 256 (rows are (n, weights, y, frequencies, B3)).
Status legend: a digit string means a known exact classification count,
">=N" at least N known codes, "None <method>" a non-existence verdict with its
method, "Open" an unresolved case, "realized" a known code without a count.
"""
TABLE1 = [
    (4,3,(1,2,3),(1,3,3),"1"),
    (8,4,(2,4,6),(1,11,3),"1"),
    (8,5,(2,4,6),(5,19,7),"1"),
    (8,6,(2,4,6),(13,35,15),"1"),
    (12,5,(4,6,8),(6,16,9),"4"),
    (12,6,(4,6,8),(18,24,21),"2"),
    (16,5,(6,8,10),(6,15,10),"5"),
    (16,6,(6,8,10),(22,15,26),"1"),
    (16,7,(6,8,10),(54,15,58),"None divisibility-test"),
    (16,5,(4,8,12),(1,27,3),"1"),
    (16,6,(4,8,12),(5,51,7),"1"),
    (16,7,(4,8,12),(13,99,15),"2"),
    (20,5,(8,10,12),(5,16,10),"3"),
    (20,6,(8,10,12),(25,8,30),"None divisibility-test"),
    (24,5,(10,12,14),(3,19,9),"1"),
    (24,6,(10,12,14),(27,3,33),"None divisibility-test"),
    (24,6,(8,12,16),(6,48,9),"8"),
    (24,7,(8,12,16),(18,88,21),"52"),
    (24,8,(8,12,16),(42,168,45),"66"),
    (24,9,(8,12,16),(90,328,93),"13"),
    (24,10,(8,12,16),(186,648,189),"2"),
    (24,11,(8,12,16),(378,1288,381),"1"),
    (32,6,(12,16,20),(6,47,10),">=1"),
    (32,7,(12,16,20),(22,79,26),">=1"),
    (32,8,(12,16,20),(54,143,58),">=1"),
    (32,9,(12,16,20),(118,271,122),">=1"),
    (32,10,(12,16,20),(246,527,250),">=1"),
    (32,6,(8,16,24),(1,59,3),"1"),
    (32,7,(8,16,24),(5,115,7),"1"),
    (32,8,(8,16,24),(13,227,15),"2"),
    (32,9,(8,16,24),(29,451,31),"1"),
    (32,10,(8,16,24),(61,899,63),"None divisibility-test"),
    (40,6,(18,20,22),(25,3,35),"None divisibility-test"),
    (40,6,(16,20,24),(5,48,10),">=1"),
    (40,7,(16,20,24),(25,72,30),">=1"),
    (40,8,(16,20,24),(65,120,70),">=1"),
    (40,9,(16,20,24),(145,216,150),">=1"),
    (40,10,(16,20,24),(305,408,310),"Open"),
    (48,6,(22,24,26),(18,15,30),"1"),
    (48,6,(20,24,28),(3,51,9),"1"),
    (48,7,(20,24,28),(27,67,33),">=209586"),
    (48,8,(20,24,28),(75,99,81),">=86"),
    (48,9,(20,24,28),(171,163,177),"Open"),
    (48,7,(16,24,32),(6,112,9),"8"),
    (48,8,(16,24,32),(18,216,21),"66"),
    (48,9,(16,24,32),(42,424,45),">=7"),
    (48,10,(16,24,32),(90,840,93),">=2"),
    (48,11,(16,24,32),(186,1672,189),">=2"),
    (48,12,(16,24,32),(378,3336,381),"realized"),
    (52,6,(24,26,28),(13,24,26),"1"),
    (56,6,(26,28,30),(7,35,21),"1"),
    (56,7,(24,28,32),(28,64,35),">=1"),
    (56,8,(24,28,32),(84,80,91),">=1"),
    (56,9,(24,28,32),(196,112,203),">=1"),
    (56,10,(24,28,32),(420,176,427),"Open"),
    (58,8,(24,31,32),(76,128,51),"None length-mod-4"),
    (64,7,(28,32,36),(28,63,36),">=1"),
    (64,8,(28,32,36),(92,63,100),">=1"),
    (64,9,(28,32,36),(220,63,228),">=1"),
    (64,10,(28,32,36),(476,63,484),"Open"),
    (64,11,(28,32,36),(988,63,996),"None codetables"),
    (64,7,(24,32,40),(6,111,10),">=1"),
    (64,8,(24,32,40),(22,207,26),">=1"),
    (64,9,(24,32,40),(54,399,58),">=1"),
    (64,10,(24,32,40),(118,783,122),">=1"),
    (64,11,(24,32,40),(246,1551,250),"42"),
    (64,12,(24,32,40),(502,3087,506),"1"),
    (64,13,(24,32,40),(1014,6159,1018),"None jaffe1997"),
    (64,7,(16,32,48),(1,123,3),">=1"),
    (64,8,(16,32,48),(5,243,7),">=1"),
    (64,9,(16,32,48),(13,483,15),">=1"),
    (64,10,(16,32,48),(29,963,31),">=1"),
    (64,11,(16,32,48),(61,1923,63),"1"),
    (64,12,(16,32,48),(125,3843,127),"None dimension-bound"),
    (64,13,(16,32,48),(253,7683,255),"None dimension-bound"),
    (64,14,(16,32,48),(509,15363,511),"None dimension-bound"),
    (64,15,(16,32,48),(1021,30723,1023),"None dimension-bound"),
    (68,9,(30,32,40),(64,299,148),"None dimension-bound"),
]
TABLE2 = [
    (3,3,(1,2,3),(6,12,8),"1"),
    (6,3,(3,4,5),(8,6,12),"1"),
    (9,3,(5,6,7),(6,8,12),"1"),
    (9,4,(3,6,9),(6,66,8),"1"),
    (18,4,(9,12,15),(8,60,12),"4"),
    (18,5,(9,12,15),(44,150,48),"213"),
    (18,6,(9,12,15),(152,420,156),"52"),
    (27,4,(15,18,21),(6,62,12),"2"),
    (27,5,(15,18,21),(60,116,66),">=2695546"),
    (27,6,(15,18,21),(222,278,228),"6"),
    (27,5,(9,18,27),(6,228,8),"1"),
    (27,6,(9,18,27),(24,678,26),"None exhaustive"),
    (36,5,(21,24,27),(72,90,80),">=1"),
    (36,6,(21,24,27),(288,144,296),">=1"),
    (36,7,(21,24,27),(936,306,944),"Open"),
    (39,5,(21,27,30),(42,188,12),"Open"),
    (39,6,(21,27,30),(156,494,78),"Open"),
    (39,7,(21,27,30),(498,1412,276),"Open"),
]
# (n, (w1,w2,w3), y, (A1,A2,A3), B3)
TABLE3 = [
    (112,(50,54,64),128,(48,336,127),322),
    (116,(54,56,64),128,(256,56,199),440),
    (120,(54,62,64),64,(72,120,63),1180),
    (124,(56,64,66),64,(72,119,64),1296),
    (140,(64,72,74),64,(71,120,64),1840),
    (202,(96,103,104),64,(67,128,60),5396),
    (212,(96,110,112),256,(297,640,86),1860),
    (212,(96,110,112),512,(649,896,502),1090),
    (240,(110,122,128),256,(288,480,255),2450),
]
