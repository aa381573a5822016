def f_gold ( n ) :
    import math
    result = 36
    for i in range ( n ) :
        result += i * 2
    if result % 3 == 0 :
        result = result // 2
    else :
        result = result + 1
    result = int ( math . fabs ( result ) )
    return result
