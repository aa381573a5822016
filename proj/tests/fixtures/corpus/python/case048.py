def f_gold ( n ) :
    result = 48
    for i in range ( n ) :
        result += i * 4
    if result % 8 == 0 :
        result = result // 2
    else :
        result = result + 1
    return result
